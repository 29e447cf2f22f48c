//! Seeds, exchange matrices and mutation.
//!
//! A [`Seed`] stores each cluster variable as a Laurent polynomial in the
//! *initial* cluster, so mutation is carried out by exact Laurent division.
//! A failed division means the implementation is broken and is surfaced
//! as [`Error::LaurentViolation`].

mod canonical;
mod matrix;
mod word;

use std::fmt;
use std::sync::Arc;

pub use canonical::Canonical;
pub use matrix::{find_symmetrizer, ExchangeMatrix};
pub use word::MutationWord;

use crate::algebra::{LaurentPoly, Registry, TropMonomial, VarId, VarKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    registry: Arc<Registry>,
    cluster: Vec<LaurentPoly>,
    coeffs: Vec<TropMonomial>,
    matrix: ExchangeMatrix,
}

impl Seed {
    /// Builds and validates a seed from raw parts.
    pub fn new(
        registry: Arc<Registry>,
        cluster: Vec<LaurentPoly>,
        coeffs: Vec<TropMonomial>,
        rows: &[Vec<i64>],
    ) -> Result<Self> {
        if rows.len() != cluster.len() {
            return Err(Error::InvalidSeed(format!(
                "{} cluster entries but exchange matrix has {} rows",
                cluster.len(),
                rows.len()
            )));
        }
        let matrix = ExchangeMatrix::new(rows).map_err(|e| match e {
            Error::NotSkewSymmetrizable(msg) => Error::InvalidSeed(format!("exchange matrix: {msg}")),
            other => other,
        })?;
        Self::from_matrix(registry, cluster, coeffs, matrix)
    }

    pub(crate) fn from_matrix(
        registry: Arc<Registry>,
        cluster: Vec<LaurentPoly>,
        coeffs: Vec<TropMonomial>,
        matrix: ExchangeMatrix,
    ) -> Result<Self> {
        let seed = Self { registry, cluster, coeffs, matrix };
        seed.validate()?;
        Ok(seed)
    }

    /// The initial seed whose cluster is the mutable variables of `registry`,
    /// in declaration order.
    pub fn initial(registry: Registry, coeffs: Vec<TropMonomial>, rows: &[Vec<i64>]) -> Result<Self> {
        let cluster = registry.ids_of_kind(VarKind::Mutable).map(LaurentPoly::var).collect();
        Self::new(Arc::new(registry), cluster, coeffs, rows)
    }

    /// Initial seed with variables `x1..xn` and trivial coefficients.
    pub fn with_trivial_coefficients(rows: &[Vec<i64>]) -> Result<Self> {
        let names: Vec<String> = (1..=rows.len()).map(|i| format!("x{i}")).collect();
        let registry = Registry::with_names(&names, &[] as &[String]).map_err(Error::InvalidSeed)?;
        Self::initial(registry, vec![TropMonomial::one(); rows.len()], rows)
    }

    /// Checks every seed invariant, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.matrix.rank();
        if self.cluster.len() != n {
            return Err(Error::InvalidSeed(format!(
                "{} cluster entries for a rank {n} exchange matrix",
                self.cluster.len()
            )));
        }
        if self.coeffs.len() != n {
            return Err(Error::InvalidSeed(format!("{} coefficients for rank {n}", self.coeffs.len())));
        }
        let in_registry = |v: VarId| v.index() < self.registry.len();
        for (i, x) in self.cluster.iter().enumerate() {
            if x.is_zero() {
                return Err(Error::InvalidSeed(format!("cluster entry {} is zero", i + 1)));
            }
            if !x.variables().into_iter().all(in_registry) {
                return Err(Error::InvalidSeed(format!("cluster entry {} uses an undeclared variable", i + 1)));
            }
        }
        for (i, y) in self.coeffs.iter().enumerate() {
            for (v, _) in y.as_monomial().iter() {
                if !in_registry(v) || !self.registry.kind(v).is_frozen() {
                    return Err(Error::InvalidSeed(format!(
                        "coefficient {} involves a non-frozen variable",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn registry_arc(&self) -> &Arc<Registry> {
        &self.registry
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn coeffs(&self) -> &[TropMonomial] {
        &self.coeffs
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    /// True if every cluster entry is a distinct mutable variable of the registry.
    pub fn is_initial(&self) -> bool {
        let mut seen = Vec::new();
        self.cluster.iter().all(|x| match x.as_variable() {
            Some(v) if self.registry.kind(v) == VarKind::Mutable && !seen.contains(&v) => {
                seen.push(v);
                true
            }
            _ => false,
        })
    }

    /// The same coefficients and exchange matrix over another cluster.
    pub(crate) fn with_cluster(&self, cluster: Vec<LaurentPoly>) -> Seed {
        assert_eq!(cluster.len(), self.rank());
        Seed { cluster, ..self.clone() }
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        self.check_index(k)?;
        let x = mutate_cluster(self, k)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = x;
        Ok(Seed {
            registry: self.registry.clone(),
            cluster,
            coeffs: mutate_coefficients(&self.coeffs, &self.matrix, k),
            matrix: self.matrix.mutate(k),
        })
    }

    /// Applies a mutation word left to right.
    pub fn mutate_word(&self, word: &MutationWord) -> Result<Seed> {
        word.check_rank(self.rank())?;
        let mut seed = self.clone();
        for (step, &k) in word.indices().iter().enumerate() {
            seed = seed.mutate(k).map_err(|e| match e {
                Error::LaurentViolation { detail, .. } => {
                    Error::LaurentViolation { word: word.to_string(), step: step + 1, detail }
                }
                other => other,
            })?;
        }
        Ok(seed)
    }

    /// Relabels indices: new position `p` takes old index `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Seed {
        let n = self.rank();
        assert_eq!(perm.len(), n, "permutation length differs from rank");
        let mut seen = vec![false; n];
        for &i in perm {
            assert!(i < n && !seen[i], "not a permutation: {perm:?}");
            seen[i] = true;
        }
        Seed {
            registry: self.registry.clone(),
            cluster: perm.iter().map(|&i| self.cluster[i].clone()).collect(),
            coeffs: perm.iter().map(|&i| self.coeffs[i].clone()).collect(),
            matrix: self.matrix.permute(perm),
        }
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.rank() {
            Err(Error::IndexOutOfRange { index: k + 1, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn cluster_strings(&self) -> Vec<String> {
        self.cluster.iter().map(|x| x.format(&self.registry)).collect()
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|y| y.format(&self.registry)).collect()
    }

    /// Deterministic text serialization, used as the canonical key.
    pub fn serialize(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .rows()
            .iter()
            .map(|r| r.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!(
            "x: {} | y: {} | B: {}",
            self.cluster_strings().join(" ; "),
            self.coeff_strings().join(" ; "),
            rows.join(" ; ")
        )
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cluster:")?;
        for (i, x) in self.cluster_strings().iter().enumerate() {
            writeln!(f, "  {}: {x}", i + 1)?;
        }
        writeln!(f, "coefficients: [{}]", self.coeff_strings().join(", "))?;
        write!(f, "B: {}", self.matrix)
    }
}

/// Coefficient mutation at `k`: `y_k ↦ y_k⁻¹` and, for `j ≠ k`,
/// `y_j ↦ y_j · y_k^[b_kj]₊ · (y_k ⊕ 1)^(−b_kj)`.
pub fn mutate_coefficients(y: &[TropMonomial], b: &ExchangeMatrix, k: usize) -> Vec<TropMonomial> {
    let yk = &y[k];
    let yk_plus_one = yk.oplus(&TropMonomial::one());
    y.iter()
        .enumerate()
        .map(|(j, yj)| {
            if j == k {
                yk.inv()
            } else {
                let bkj = b.get(k, j) as i32;
                yj.mul(&yk.pow(bkj.max(0))).mul(&yk_plus_one.pow(-bkj))
            }
        })
        .collect()
}

/// The new cluster variable produced by mutating `seed` at `k`:
/// `(y_k ∏ x_j^[b_jk]₊ + ∏ x_j^[−b_jk]₊) / ((y_k ⊕ 1) · x_k)`.
pub fn mutate_cluster(seed: &Seed, k: usize) -> Result<LaurentPoly> {
    seed.check_index(k)?;
    let b = &seed.matrix;
    let mut plus = LaurentPoly::one();
    let mut minus = LaurentPoly::one();
    for (j, xj) in seed.cluster.iter().enumerate() {
        let bjk = b.get(j, k);
        if bjk > 0 {
            plus = &plus * &xj.pow(bjk as u32);
        } else if bjk < 0 {
            minus = &minus * &xj.pow((-bjk) as u32);
        }
    }
    let yk = &seed.coeffs[k];
    let numerator = &(&yk.to_laurent() * &plus) + &minus;
    let denominator = &yk.oplus(&TropMonomial::one()).to_laurent() * &seed.cluster[k];
    numerator.exact_div(&denominator).map_err(|e| Error::LaurentViolation {
        word: String::new(),
        step: 0,
        detail: format!("mutation at {}: {e}", k + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn a2() -> Seed {
        Seed::with_trivial_coefficients(&[vec![0, -1], vec![1, 0]]).unwrap()
    }

    fn strings(s: &Seed) -> Vec<String> {
        s.cluster_strings()
    }

    #[test]
    fn validate_examples() {
        assert!(a2().validate().is_ok());
        assert!(matches!(
            Seed::with_trivial_coefficients(&[vec![0, 1], vec![1, 0]]),
            Err(Error::InvalidSeed(_))
        ));
        let reg = Arc::new(Registry::with_names(&["x1", "x2", "x3"], &[] as &[&str]).unwrap());
        let cluster = (0..3).map(|i| LaurentPoly::var(VarId(i))).collect();
        let err = Seed::new(reg, cluster, vec![TropMonomial::one(); 3], &[vec![0, -1], vec![1, 0]]);
        assert!(matches!(err, Err(Error::InvalidSeed(_))));
    }

    #[test]
    fn coefficients_must_be_frozen() {
        let reg = Registry::with_names(&["x1"], &["u"]).unwrap();
        let bad = Seed::initial(reg.clone(), vec![TropMonomial::var_pow(VarId(0), 1)], &[vec![0]]);
        assert!(matches!(bad, Err(Error::InvalidSeed(_))));
        assert!(Seed::initial(reg, vec![TropMonomial::var_pow(VarId(1), 1)], &[vec![0]]).is_ok());
    }

    #[test]
    fn a2_cluster_mutations() {
        let s = a2();
        let s1 = s.mutate(0).unwrap();
        assert_eq!(strings(&s1), vec!["x1^-1*x2 + x1^-1", "x2"]);
        let s12 = s1.mutate(1).unwrap();
        assert_eq!(strings(&s12)[1], "x2^-1 + x1^-1 + x1^-1*x2^-1");
        let s2 = s.mutate(1).unwrap();
        assert_eq!(strings(&s2), vec!["x1", "x1*x2^-1 + x2^-1"]);
        assert_eq!(s.mutate(0).unwrap().mutate(0).unwrap(), s);
    }

    #[test]
    fn a2_pentagon_closes_with_swap() {
        let s = a2();
        let w: MutationWord = "1,2,1,2,1".parse().unwrap();
        let t = s.mutate_word(&w).unwrap();
        assert_eq!(t.permute(&[1, 0]), s);
    }

    #[test]
    fn rank_one_isolated_mutation() {
        let s = Seed::with_trivial_coefficients(&[vec![0]]).unwrap();
        let reg = s.registry().clone();
        assert_eq!(mutate_cluster(&s, 0).unwrap().format(&reg), "2*x1^-1");
    }

    #[test]
    fn coefficient_mutation_examples() {
        let u = VarId(0);
        let b1 = ExchangeMatrix::zero(1);
        let y = vec![TropMonomial::var_pow(u, 1)];
        assert_eq!(mutate_coefficients(&y, &b1, 0), vec![TropMonomial::var_pow(u, -1)]);

        let b = ExchangeMatrix::new(&[vec![0, -1], vec![1, 0]]).unwrap();
        let y = vec![TropMonomial::var_pow(u, 1), TropMonomial::one()];
        assert_eq!(mutate_coefficients(&y, &b, 0)[1], TropMonomial::one());
        let y = vec![TropMonomial::var_pow(u, -1), TropMonomial::one()];
        assert_eq!(mutate_coefficients(&y, &b, 0)[1], TropMonomial::var_pow(u, -1));
    }

    #[test]
    fn tropical_mutation_divides_exactly() {
        // principal coefficients on A2
        let reg = Registry::with_names(&["x1", "x2"], &["u1", "u2"]).unwrap();
        let y = vec![TropMonomial::var_pow(VarId(2), 1), TropMonomial::var_pow(VarId(3), 1)];
        let s = Seed::initial(reg, y, &[vec![0, -1], vec![1, 0]]).unwrap();
        let t = s.mutate_word(&"1,2,1,2,1".parse().unwrap()).unwrap();
        assert_eq!(t.permute(&[1, 0]).cluster(), s.cluster());
        let x1p = s.mutate(0).unwrap().cluster()[0].clone();
        assert_eq!(x1p.format(s.registry()), "x1^-1*x2*u1 + x1^-1");
    }

    #[test]
    fn permute_examples() {
        let s = a2();
        assert_eq!(s.permute(&[0, 1]), s);
        let t = s.permute(&[1, 0]);
        assert_eq!(t.matrix().rows(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(strings(&t), vec!["x2", "x1"]);
        assert_eq!(t.permute(&[1, 0]), s);
    }

    #[test]
    fn out_of_range_index() {
        assert!(matches!(a2().mutate(2), Err(Error::IndexOutOfRange { index: 3, rank: 2 })));
        assert!(a2().mutate_word(&MutationWord(vec![0, 5])).is_err());
    }

    #[test]
    fn is_initial_detects_bare_cluster() {
        let s = a2();
        assert!(s.is_initial());
        assert!(!s.mutate(0).unwrap().is_initial());
        let swapped = s.permute(&[1, 0]);
        assert!(swapped.is_initial());
        let m = Monomial::var(VarId(0));
        assert!(!Seed { cluster: vec![LaurentPoly::monomial(m.clone()), LaurentPoly::monomial(m)], ..s }
            .is_initial());
    }
}
