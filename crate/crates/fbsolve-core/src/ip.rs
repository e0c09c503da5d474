//! Exact minimization of small integer programs with finite variable
//! domains and linear greater-or-equal constraints.
//!
//! The annotated MDD method needs only programs whose variable count is
//! bounded by the parameter, so an exhaustive depth-first search with
//! slack and objective pruning replaces the heavyweight fixed-parameter
//! ILP machinery from the literature. The search is deterministic:
//! variables in index order, values ascending, first optimum kept.

use alloc::vec;
use alloc::vec::Vec;

/// Inclusive integer domain of one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntVar {
    pub lo: i64,
    pub hi: i64,
}

/// `Σ coeffs[j] · x_j ≥ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

/// Finite-domain integer program minimizing `Σ x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundedIntProgram {
    pub vars: Vec<IntVar>,
    pub constraints: Vec<LinearConstraint>,
}

impl BoundedIntProgram {
    pub fn is_satisfied(&self, assignment: &[i64]) -> bool {
        assignment.len() == self.vars.len()
            && assignment.iter().zip(&self.vars).all(|(&x, v)| v.lo <= x && x <= v.hi)
            && self.constraints.iter().all(|c| {
                c.coeffs.iter().zip(assignment).map(|(&a, &x)| a * x).sum::<i64>() >= c.bound
            })
    }
}

/// Global optimum of a [`BoundedIntProgram`], or `None` if infeasible.
/// Returns the lexicographically smallest optimal assignment and the
/// objective value.
pub fn solve_bounded_ip(p: &BoundedIntProgram) -> Option<(Vec<i64>, i64)> {
    let nv = p.vars.len();
    if p.vars.iter().any(|v| v.lo > v.hi) {
        return None;
    }
    // suffix_best[c][j]: largest achievable contribution of x_j..x_nv
    // to constraint c. suffix_lo[j]: smallest objective contribution of
    // the same tail.
    let mut suffix_lo = vec![0i64; nv + 1];
    for j in (0..nv).rev() {
        suffix_lo[j] = suffix_lo[j + 1] + p.vars[j].lo;
    }
    let mut suffix_best = vec![vec![0i64; nv + 1]; p.constraints.len()];
    for (c, con) in p.constraints.iter().enumerate() {
        for j in (0..nv).rev() {
            let a = con.coeffs[j];
            suffix_best[c][j] = suffix_best[c][j + 1] + (a * p.vars[j].lo).max(a * p.vars[j].hi);
        }
    }

    struct Search<'a> {
        p: &'a BoundedIntProgram,
        suffix_lo: Vec<i64>,
        suffix_best: Vec<Vec<i64>>,
        partial: Vec<i64>,
        con_partial: Vec<i64>,
        best: Option<(Vec<i64>, i64)>,
    }

    impl Search<'_> {
        fn dfs(&mut self, j: usize, obj: i64) {
            if let Some((_, best_obj)) = &self.best {
                if obj + self.suffix_lo[j] >= *best_obj {
                    return;
                }
            }
            for (c, con) in self.p.constraints.iter().enumerate() {
                if self.con_partial[c] + self.suffix_best[c][j] < con.bound {
                    return;
                }
            }
            if j == self.p.vars.len() {
                self.best = Some((self.partial.clone(), obj));
                return;
            }
            let IntVar { lo, hi } = self.p.vars[j];
            for x in lo..=hi {
                self.partial.push(x);
                for (c, con) in self.p.constraints.iter().enumerate() {
                    self.con_partial[c] += con.coeffs[j] * x;
                }
                self.dfs(j + 1, obj + x);
                for (c, con) in self.p.constraints.iter().enumerate() {
                    self.con_partial[c] -= con.coeffs[j] * x;
                }
                self.partial.pop();
            }
        }
    }

    let mut search = Search {
        p,
        suffix_lo,
        suffix_best,
        partial: Vec::with_capacity(nv),
        con_partial: vec![0; p.constraints.len()],
        best: None,
    };
    search.dfs(0, 0);
    search.best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(lo: i64, hi: i64) -> IntVar {
        IntVar { lo, hi }
    }

    #[test]
    fn single_variable_with_lower_bound() {
        let p = BoundedIntProgram {
            vars: alloc::vec![var(0, 3)],
            constraints: alloc::vec![LinearConstraint { coeffs: alloc::vec![1], bound: 2 }],
        };
        assert_eq!(solve_bounded_ip(&p), Some((alloc::vec![2], 2)));
    }

    #[test]
    fn empty_domain_is_infeasible() {
        let p = BoundedIntProgram { vars: alloc::vec![var(3, 1)], constraints: alloc::vec![] };
        assert_eq!(solve_bounded_ip(&p), None);
    }

    #[test]
    fn unsatisfiable_constraint_is_infeasible() {
        let p = BoundedIntProgram {
            vars: alloc::vec![var(0, 2), var(0, 2)],
            constraints: alloc::vec![LinearConstraint { coeffs: alloc::vec![1, 1], bound: 5 }],
        };
        assert_eq!(solve_bounded_ip(&p), None);
    }

    #[test]
    fn matches_full_enumeration_on_random_programs() {
        fn enumerate(p: &BoundedIntProgram) -> Option<i64> {
            fn rec(p: &BoundedIntProgram, j: usize, cur: &mut Vec<i64>, best: &mut Option<i64>) {
                if j == p.vars.len() {
                    if p.is_satisfied(cur) {
                        let obj: i64 = cur.iter().sum();
                        *best = Some(best.map_or(obj, |b: i64| b.min(obj)));
                    }
                    return;
                }
                for x in p.vars[j].lo..=p.vars[j].hi {
                    cur.push(x);
                    rec(p, j + 1, cur, best);
                    cur.pop();
                }
            }
            let mut best = None;
            rec(p, 0, &mut Vec::new(), &mut best);
            best
        }

        let mut state = 7u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let nv = 1 + (next() % 4) as usize;
            let vars: Vec<IntVar> = (0..nv)
                .map(|_| {
                    let lo = (next() % 4) as i64 - 1;
                    let width = (next() % 6) as i64;
                    var(lo, lo + width)
                })
                .collect();
            let nc = (next() % 4) as usize;
            let constraints: Vec<LinearConstraint> = (0..nc)
                .map(|_| LinearConstraint {
                    coeffs: (0..nv).map(|_| (next() % 5) as i64 - 2).collect(),
                    bound: (next() % 9) as i64 - 2,
                })
                .collect();
            let p = BoundedIntProgram { vars, constraints };
            let fast = solve_bounded_ip(&p);
            let slow = enumerate(&p);
            assert_eq!(fast.as_ref().map(|(_, o)| *o), slow, "{p:?}");
            if let Some((assignment, obj)) = fast {
                assert!(p.is_satisfied(&assignment));
                assert_eq!(assignment.iter().sum::<i64>(), obj);
            }
        }
    }

    #[test]
    fn optimum_invariant_under_row_permutation_and_renaming() {
        let p = BoundedIntProgram {
            vars: alloc::vec![var(0, 4), var(1, 3), var(0, 2)],
            constraints: alloc::vec![
                LinearConstraint { coeffs: alloc::vec![1, 1, 0], bound: 3 },
                LinearConstraint { coeffs: alloc::vec![0, 1, 2], bound: 4 },
            ],
        };
        let base = solve_bounded_ip(&p).unwrap().1;

        let rows_swapped = BoundedIntProgram {
            vars: p.vars.clone(),
            constraints: alloc::vec![p.constraints[1].clone(), p.constraints[0].clone()],
        };
        assert_eq!(solve_bounded_ip(&rows_swapped).unwrap().1, base);

        // Rename variables (reverse order).
        let renamed = BoundedIntProgram {
            vars: p.vars.iter().rev().copied().collect(),
            constraints: p
                .constraints
                .iter()
                .map(|c| LinearConstraint {
                    coeffs: c.coeffs.iter().rev().copied().collect(),
                    bound: c.bound,
                })
                .collect(),
        };
        assert_eq!(solve_bounded_ip(&renamed).unwrap().1, base);
    }
}
