use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Square integer exchange matrix together with its (cached) minimal
/// symmetrizer `D`, so that `D·B` is skew-symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
    symmetrizer: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let symmetrizer = find_symmetrizer(rows)?;
        let n = rows.len();
        Ok(Self { n, entries: rows.concat(), symmetrizer })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![0; n * n], symmetrizer: vec![1; n] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&b| b == 0)
    }

    /// Matrix mutation at `k`: row and column `k` change sign, every other
    /// entry gains `(|b_ik|·b_kj + b_ik·|b_kj|) / 2`.
    pub fn mutate(&self, k: usize) -> Self {
        assert!(k < self.n, "mutation index {k} out of range for rank {}", self.n);
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let b = self.get(i, j);
                entries[i * n + j] = if i == k || j == k {
                    -b
                } else {
                    let (bik, bkj) = (self.get(i, k), self.get(k, j));
                    let twice = bik.abs() * bkj + bik * bkj.abs();
                    assert!(twice % 2 == 0, "odd correction term in matrix mutation");
                    b + twice / 2
                };
            }
        }
        Self { n, entries, symmetrizer: self.symmetrizer.clone() }
    }

    /// Relabels indices: position `p` of the result is old index `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for p in 0..n {
            for q in 0..n {
                entries[p * n + q] = self.get(perm[p], perm[q]);
            }
        }
        let symmetrizer = perm.iter().map(|&i| self.symmetrizer[i]).collect();
        Self { n, entries, symmetrizer }
    }

    /// Principal submatrix on the listed indices, in the given order.
    pub fn submatrix(&self, keep: &[usize]) -> Self {
        let rows: Vec<Vec<i64>> =
            keep.iter().map(|&i| keep.iter().map(|&j| self.get(i, j)).collect()).collect();
        // A principal submatrix of a skew-symmetrizable matrix is skew-symmetrizable.
        Self::new(&rows).expect("principal submatrix stays skew-symmetrizable")
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|b| b.to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Minimal positive integer diagonal `D` with `D·B` skew-symmetric.
///
/// Ratios `d_j / d_i = -B_ij / B_ji` are propagated across each connected
/// component of the graph of nonzero entries, then denominators are
/// cleared and each component is reduced to gcd 1.
pub fn find_symmetrizer(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = rows.len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::NotSkewSymmetrizable(format!(
            "row {} has {} entries, expected {n}",
            i + 1,
            r.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row[i] != 0 {
            return Err(Error::NotSkewSymmetrizable(format!("nonzero diagonal entry at ({0},{0})", i + 1)));
        }
        for (j, &a) in row.iter().enumerate() {
            let b = rows[j][i];
            if (a == 0) != (b == 0) || (a != 0 && a.signum() == b.signum()) {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "sign condition fails at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }

    let mut ratio: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if ratio[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        ratio[start] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = ratio[i].unwrap();
            for j in 0..n {
                if rows[i][j] == 0 {
                    continue;
                }
                let dj = -di * Ratio::new(rows[i][j], rows[j][i]);
                match ratio[j] {
                    None => {
                        ratio[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSkewSymmetrizable(format!(
                            "inconsistent ratios around index {}",
                            j + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &i| acc.lcm(ratio[i].unwrap().denom()));
        let scaled: Vec<i64> = component.iter().map(|&i| (ratio[i].unwrap() * lcm).to_integer()).collect();
        let g = scaled.iter().fold(0i64, |acc, &d| acc.gcd(&d));
        for (&i, d) in component.iter().zip(scaled) {
            out[i] = d / g;
        }
    }

    for i in 0..n {
        for j in 0..n {
            if out[i] * rows[i][j] != -out[j] * rows[j][i] {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "no symmetrizer balances ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrizer_examples() {
        let b = vec![vec![0, 1], vec![-2, 0]];
        let d = find_symmetrizer(&b).unwrap();
        assert_eq!(d, vec![2, 1]);
        // D·B = [[0,2],[-2,0]]
        assert_eq!((d[0] * b[0][1], d[1] * b[1][0]), (2, -2));

        let skew = vec![vec![0, 2, -1], vec![-2, 0, 3], vec![1, -3, 0]];
        assert_eq!(find_symmetrizer(&skew).unwrap(), vec![1, 1, 1]);

        assert!(matches!(
            find_symmetrizer(&[vec![0, 1], vec![1, 0]]),
            Err(Error::NotSkewSymmetrizable(_))
        ));
    }

    #[test]
    fn symmetrizer_detects_inconsistent_cycles() {
        // ratios around the triangle multiply to 2·1·1 ≠ 1
        let b = vec![vec![0, 1, -1], vec![-2, 0, 1], vec![1, -1, 0]];
        assert!(find_symmetrizer(&b).is_err());
    }

    #[test]
    fn symmetrizer_per_component_is_minimal() {
        // B2 block plus an isolated vertex
        let b = vec![vec![0, 2, 0], vec![-1, 0, 0], vec![0, 0, 0]];
        assert_eq!(find_symmetrizer(&b).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn mutation_examples() {
        let a2 = ExchangeMatrix::new(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(a2.mutate(0).rows(), vec![vec![0, 1], vec![-1, 0]]);

        let a3 = ExchangeMatrix::new(&[vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        assert_eq!(a3.mutate(1).rows(), vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]);
        assert_eq!(a3.mutate(1).mutate(1), a3);
    }

    #[test]
    fn non_square_rejected() {
        assert!(ExchangeMatrix::new(&[vec![0, 1], vec![-1]]).is_err());
    }

    #[test]
    fn permute_swaps_rows_and_columns() {
        let a2 = ExchangeMatrix::new(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(a2.permute(&[1, 0]).rows(), vec![vec![0, 1], vec![-1, 0]]);
    }
}
