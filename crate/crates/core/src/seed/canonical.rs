use super::Seed;

/// A seed relabeled into canonical index order, with its key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub seed: Seed,
    pub key: String,
    /// `perm[p]` is the index of the input seed now at position `p`.
    pub perm: Vec<usize>,
}

impl Seed {
    /// Sorts indices by (cluster expression, coefficient, B column) in
    /// serialized form, ties broken by original index. Two seeds differ by
    /// a permutation exactly when their keys agree.
    pub fn canonical_form(&self) -> Canonical {
        let xs = self.cluster_strings();
        let ys = self.coeff_strings();
        let cols: Vec<Vec<i64>> = (0..self.rank()).map(|j| self.matrix().column(j)).collect();
        let mut perm: Vec<usize> = (0..self.rank()).collect();
        perm.sort_by(|&a, &b| {
            (&xs[a], &ys[a], &cols[a]).cmp(&(&xs[b], &ys[b], &cols[b])).then(a.cmp(&b))
        });
        let seed = self.permute(&perm);
        let key = seed.serialize();
        Canonical { seed, key, perm }
    }

    pub fn canonical_key(&self) -> String {
        self.canonical_form().key
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Seed {
        Seed::with_trivial_coefficients(&[vec![0, -1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn orbit_invariance_and_idempotence() {
        let s = a2().mutate(0).unwrap();
        let c = s.canonical_form();
        assert_eq!(s.permute(&[1, 0]).canonical_key(), c.key);
        assert_eq!(c.seed.canonical_form().seed, c.seed);
        assert_eq!(c.seed.canonical_form().perm, vec![0, 1]);
        assert_eq!(s.permute(&c.perm), c.seed);
    }

    #[test]
    fn distinct_clusters_have_distinct_keys() {
        let s = a2();
        assert_ne!(s.canonical_key(), s.mutate(0).unwrap().canonical_key());
    }
}
