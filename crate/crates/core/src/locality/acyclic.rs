use crate::seed::ExchangeMatrix;

/// Directed graph on indices with an edge `i → j` iff `B_ji > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationDigraph {
    out: Vec<Vec<usize>>,
}

impl MutationDigraph {
    pub fn new(b: &ExchangeMatrix) -> Self {
        let n = b.rank();
        let out = (0..n).map(|i| (0..n).filter(|&j| b.get(j, i) > 0).collect()).collect();
        Self { out }
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    /// Some directed cycle, as a list of indices, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.out.len();
        let mut mark = vec![Mark::New; n];
        let mut stack: Vec<usize> = Vec::new();

        fn visit(g: &MutationDigraph, i: usize, mark: &mut [Mark], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
            mark[i] = Mark::Active;
            stack.push(i);
            for &j in g.successors(i) {
                match mark[j] {
                    Mark::Active => {
                        let at = stack.iter().position(|&s| s == j).unwrap();
                        return Some(stack[at..].to_vec());
                    }
                    Mark::New => {
                        if let Some(c) = visit(g, j, mark, stack) {
                            return Some(c);
                        }
                    }
                    Mark::Done => {}
                }
            }
            stack.pop();
            mark[i] = Mark::Done;
            None
        }

        (0..n).find_map(|i| if mark[i] == Mark::New { visit(self, i, &mut mark, &mut stack) } else { None })
    }
}

pub fn is_acyclic(b: &ExchangeMatrix) -> bool {
    MutationDigraph::new(b).find_cycle().is_none()
}

/// Smallest index `i` with `B_ji ≤ 0` for every `j`.
pub fn find_sink(b: &ExchangeMatrix) -> Option<usize> {
    (0..b.rank()).find(|&i| (0..b.rank()).all(|j| b.get(j, i) <= 0))
}
