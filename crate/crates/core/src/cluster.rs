//! Seeds with principal coefficients, mutation, and flip-driven search.
//!
//! A seed pairs an extended exchange matrix (the `n x n` signed adjacency
//! matrix of the triangulation stacked over an `n x n` coefficient block,
//! initially the identity) with one Laurent polynomial per direction. Seeds
//! mutate by the usual exchange: the variable in direction `k` is replaced
//! by the sum of the two cluster monomials read off column `k`, divided --
//! exactly, or it is a bug -- by the old variable.
//!
//! Because flipping an arc of the triangulation and mutating the seed in the
//! same direction must stay in lockstep, the searches here recompute the
//! matrix from each flipped triangulation and compare it against the mutated
//! one at every step, and re-verify the seed whenever a triangulation is
//! reached a second time. Any disagreement is reported as an error rather
//! than papered over.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly};
use crate::quiver::Quiver;
use crate::surface::{Surface, SurfaceError, TriangulationKey};

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("cluster: direction {0} out of range")]
    DirectionOutOfRange(usize),
    #[error("cluster: exchange in direction {k} did not divide exactly: {source}")]
    InexactExchange { k: usize, source: LaurentError },
    #[error("cluster: coefficient monomials are only defined in the initial frame")]
    NotInitialFrame,
    #[error(
        "cluster: matrix of the flipped triangulation disagrees with mutation in direction {k}"
    )]
    FlipMutationMismatch { k: usize },
    #[error(
        "cluster: two flip sequences produced different variables with minimum x-exponents {denominator:?}"
    )]
    VariableMismatch { denominator: Vec<i64> },
    #[error(
        "cluster: no cluster variable with the requested denominator within {max_depth} flips"
    )]
    NotFound { max_depth: usize },
    #[error("cluster: exploration exceeded {0} seeds")]
    ExplorationLimit(usize),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Mutate an extended exchange matrix (any number of rows, `n` columns) in
/// direction `k`. Entries in row or column `k` flip sign; every other entry
/// `b_ij` gains `[-b_ik]_+ b_kj + b_ik [b_kj]_+`.
pub fn mutate_matrix(matrix: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let plus = |v: i64| v.max(0);
    matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &b)| {
                    if i == k || j == k {
                        -b
                    } else {
                        b + plus(-matrix[i][k]) * matrix[k][j] + matrix[i][k] * plus(matrix[k][j])
                    }
                })
                .collect()
        })
        .collect()
}

/// A seed: extended exchange matrix plus one variable per direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    n: usize,
    /// `2n x n`: the exchange block over the coefficient block.
    matrix: Vec<Vec<i64>>,
    vars: Vec<LaurentPoly>,
}

impl Seed {
    /// The initial seed on an `n x n` exchange matrix: coefficient block the
    /// identity, variable `x_{k+1}` in each direction `k`.
    pub fn initial(b: &[Vec<i64>]) -> Seed {
        let n = b.len();
        assert!(b.iter().all(|row| row.len() == n), "matrix is square");
        let mut matrix = Vec::with_capacity(2 * n);
        matrix.extend(b.iter().cloned());
        for i in 0..n {
            let mut row = vec![0i64; n];
            row[i] = 1;
            matrix.push(row);
        }
        let vars = (1..=n).map(|i| LaurentPoly::var_x(n, i)).collect();
        Seed { n, matrix, vars }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The full `2n x n` matrix.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// The top `n x n` exchange block.
    pub fn exchange_block(&self) -> &[Vec<i64>] {
        &self.matrix[..self.n]
    }

    pub fn vars(&self) -> &[LaurentPoly] {
        &self.vars
    }

    /// Does the coefficient block still equal the identity?
    pub fn is_initial_frame(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.matrix[self.n + i][j] == i64::from(i == j)))
    }

    /// The coefficient monomial of direction `j` in the initial frame:
    /// `y_{j+1}` times `x` to the `j`-th matrix column.
    pub fn coefficient_monomial(&self, j: usize) -> Result<LaurentPoly, ClusterError> {
        if j >= self.n {
            return Err(ClusterError::DirectionOutOfRange(j));
        }
        if !self.is_initial_frame() {
            return Err(ClusterError::NotInitialFrame);
        }
        let xs: Vec<i64> = (0..self.n).map(|i| self.matrix[i][j]).collect();
        let mut ys = vec![0u32; self.n];
        ys[j] = 1;
        Ok(LaurentPoly::monomial(self.n, BigInt::one(), &xs, &ys)
            .expect("exponent lengths match the rank"))
    }

    /// The variable (cluster variable for directions `< n`, coefficient
    /// variable above) entering exchange products.
    fn extended_var(&self, i: usize) -> LaurentPoly {
        if i < self.n {
            self.vars[i].clone()
        } else {
            LaurentPoly::var_y(self.n, i - self.n + 1)
        }
    }

    /// Mutate in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        if k >= self.n {
            return Err(ClusterError::DirectionOutOfRange(k));
        }
        let mut plus = LaurentPoly::one(self.n);
        let mut minus = LaurentPoly::one(self.n);
        for i in 0..2 * self.n {
            let e = self.matrix[i][k];
            if e > 0 {
                plus = plus.mul(&self.extended_var(i).pow(e as u32))?;
            } else if e < 0 {
                minus = minus.mul(&self.extended_var(i).pow((-e) as u32))?;
            }
        }
        let sum = plus.add(&minus)?;
        let new_var = sum
            .divide_exact(&self.vars[k])
            .map_err(|source| ClusterError::InexactExchange { k, source })?;
        let mut vars = self.vars.clone();
        vars[k] = new_var;
        Ok(Seed {
            n: self.n,
            matrix: mutate_matrix(&self.matrix, k),
            vars,
        })
    }

    /// Apply a sequence of mutations left to right.
    pub fn mutate_all(&self, directions: &[usize]) -> Result<Seed, ClusterError> {
        let mut seed = self.clone();
        for &k in directions {
            seed = seed.mutate(k)?;
        }
        Ok(seed)
    }
}

/// A triangulation with its seed, as visited by the searches below.
#[derive(Debug, Clone)]
pub struct SeedState {
    pub surface: Surface,
    pub seed: Seed,
    /// Flips (exchange positions) leading here from the initial state.
    pub flips: Vec<usize>,
}

/// Result of a successful denominator search.
#[derive(Debug, Clone)]
pub struct FlipSearch {
    pub variable: LaurentPoly,
    /// Exchange positions flipped, in order.
    pub flips: Vec<usize>,
    /// Number of distinct triangulations examined.
    pub seeds_explored: usize,
}

/// The initial seed of a triangulated surface.
pub fn initial_seed(surface: &Surface) -> Seed {
    Seed::initial(&Quiver::of(surface).b_matrix())
}

fn flip_and_mutate(state: &SeedState, k: usize) -> Result<(Surface, Seed), ClusterError> {
    let flipped = state.surface.flip(k)?;
    let mutated = state.seed.mutate(k)?;
    if Quiver::of(&flipped).b_matrix() != mutated.exchange_block() {
        return Err(ClusterError::FlipMutationMismatch { k });
    }
    Ok((flipped, mutated))
}

/// Consistency memo: every variable is filed under its minimum x-exponent
/// vector, and producing a different variable under the same exponents --
/// the same arc reached through different flip sequences -- is an error.
#[derive(Default)]
struct ArcMemo {
    by_denominator: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl ArcMemo {
    fn record(&mut self, var: &LaurentPoly) -> Result<(), ClusterError> {
        let key = var
            .min_x_exponents()
            .expect("cluster variables are nonzero");
        match self.by_denominator.get(&key) {
            Some(seen) if seen != var => Err(ClusterError::VariableMismatch { denominator: key }),
            Some(_) => Ok(()),
            None => {
                self.by_denominator.insert(key, var.clone());
                Ok(())
            }
        }
    }
}

/// Visited-state bookkeeping for the flip searches. Triangulations are keyed
/// by their canonical form first, but a state only counts as seen when an
/// equal seed was recorded under that key: on surfaces with an infinite flip
/// graph, combinatorially identical triangulations can carry genuinely
/// different variables, and those must be explored, not merged.
#[derive(Default)]
struct SeenSeeds {
    by_key: BTreeMap<TriangulationKey, Vec<Seed>>,
    count: usize,
}

impl SeenSeeds {
    /// Record the seed; false if an equal one was already present.
    fn insert(&mut self, key: TriangulationKey, seed: &Seed) -> bool {
        let bucket = self.by_key.entry(key).or_default();
        if bucket.iter().any(|s| s == seed) {
            return false;
        }
        bucket.push(seed.clone());
        self.count += 1;
        true
    }
}

/// Breadth-first search for a cluster variable whose per-variable minimum
/// x-exponents equal `target_min_x` (`-target_min_x` is the denominator
/// vector). Flip directions are tried in increasing order, so the reported
/// flip sequence is the lexicographically smallest among the shortest ones.
pub fn find_by_denominator(
    surface: &Surface,
    target_min_x: &[i64],
    max_depth: usize,
) -> Result<FlipSearch, ClusterError> {
    let n = surface.rank();
    assert_eq!(target_min_x.len(), n, "target has one entry per direction");
    let seed = initial_seed(surface);
    let mut memo = ArcMemo::default();
    for var in seed.vars() {
        memo.record(var)?;
        if var.min_x_exponents().as_deref() == Some(target_min_x) {
            return Ok(FlipSearch {
                variable: var.clone(),
                flips: Vec::new(),
                seeds_explored: 1,
            });
        }
    }
    let mut seen = SeenSeeds::default();
    seen.insert(surface.key(), &seed);
    let mut queue = VecDeque::new();
    queue.push_back(SeedState {
        surface: surface.clone(),
        seed,
        flips: Vec::new(),
    });
    while let Some(state) = queue.pop_front() {
        if state.flips.len() == max_depth {
            continue;
        }
        for k in 0..n {
            let (flipped, mutated) = flip_and_mutate(&state, k)?;
            // Only the variable in direction k is new in this seed.
            memo.record(&mutated.vars()[k])?;
            if !seen.insert(flipped.key(), &mutated) {
                continue;
            }
            let mut flips = state.flips.clone();
            flips.push(k);
            if mutated.vars()[k].min_x_exponents().as_deref() == Some(target_min_x) {
                return Ok(FlipSearch {
                    variable: mutated.vars()[k].clone(),
                    flips,
                    seeds_explored: seen.count,
                });
            }
            queue.push_back(SeedState {
                surface: flipped,
                seed: mutated,
                flips,
            });
        }
    }
    Err(ClusterError::NotFound { max_depth })
}

/// Breadth-first closure of the exchange graph: one state per cluster (the
/// unordered set of variables), up to `limit` of them. Only terminates on
/// surfaces with finitely many triangulations.
pub fn enumerate_seeds(surface: &Surface, limit: usize) -> Result<Vec<SeedState>, ClusterError> {
    let n = surface.rank();
    let seed = initial_seed(surface);
    let cluster_of = |seed: &Seed| -> Vec<String> {
        let mut c: Vec<String> = seed.vars().iter().map(LaurentPoly::render).collect();
        c.sort();
        c
    };
    let mut memo = ArcMemo::default();
    for var in seed.vars() {
        memo.record(var)?;
    }
    let mut visited: std::collections::BTreeSet<Vec<String>> = std::collections::BTreeSet::new();
    visited.insert(cluster_of(&seed));
    let mut out = vec![SeedState {
        surface: surface.clone(),
        seed,
        flips: Vec::new(),
    }];
    let mut head = 0;
    while head < out.len() {
        let state = out[head].clone();
        head += 1;
        for k in 0..n {
            let (flipped, mutated) = flip_and_mutate(&state, k)?;
            memo.record(&mutated.vars()[k])?;
            if !visited.insert(cluster_of(&mutated)) {
                continue;
            }
            if out.len() == limit {
                return Err(ClusterError::ExplorationLimit(limit));
            }
            let mut flips = state.flips.clone();
            flips.push(k);
            out.push(SeedState {
                surface: flipped,
                seed: mutated,
                flips,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kronecker_first_exchange() {
        let s = Surface::annulus(1, 1);
        let seed = initial_seed(&s);
        let b = Quiver::of(&s).b_matrix();
        let mutated = seed.mutate(0).unwrap();
        // Column 0 holds +/-2 in the off-diagonal entry and 1 in the
        // coefficient block, so the new variable is (x2^2 y1 + 1) / x1 in
        // one direction choice or (x2^2 + y1) / x1 in the other.
        let expected = if b[1][0] > 0 {
            "x1^-1 + x1^-1*x2^2*y1"
        } else {
            "x1^-1*y1 + x1^-1*x2^2"
        };
        assert_eq!(mutated.vars()[0].render(), expected);
    }

    #[test]
    fn seed_mutation_is_involutive() {
        let s = Surface::polygon(6);
        let seed = initial_seed(&s);
        for k in 0..s.rank() {
            assert_eq!(seed.mutate(k).unwrap().mutate(k).unwrap(), seed);
        }
        let walked = seed.mutate_all(&[0, 2, 1, 2]).unwrap();
        assert_eq!(walked.mutate(2).unwrap().mutate(2).unwrap(), walked);
    }

    #[test]
    fn coefficient_monomials_live_in_the_initial_frame() {
        let s = Surface::parse(include_str!("../../../fixtures/annulus.srf")).unwrap();
        let seed = initial_seed(&s);
        assert!(seed.is_initial_frame());
        assert_eq!(
            seed.coefficient_monomial(0).unwrap().render(),
            "x2*x3^-2*y1"
        );
        assert_eq!(
            seed.coefficient_monomial(1).unwrap().render(),
            "x1^-1*x3*y2"
        );
        assert_eq!(
            seed.coefficient_monomial(2).unwrap().render(),
            "x1^2*x2^-1*y3"
        );
        let mutated = seed.mutate(1).unwrap();
        assert!(!mutated.is_initial_frame());
        assert!(matches!(
            mutated.coefficient_monomial(0),
            Err(ClusterError::NotInitialFrame)
        ));
    }

    #[test]
    fn pentagon_exchange_graph_closes() {
        let s = Surface::polygon(5);
        let states = enumerate_seeds(&s, 100).unwrap();
        assert_eq!(states.len(), 5, "pentagon triangulations");
        let mut all_vars: Vec<String> = states
            .iter()
            .flat_map(|st| st.seed.vars().iter().map(|v| v.render()))
            .collect();
        all_vars.sort();
        all_vars.dedup();
        assert_eq!(all_vars.len(), 5, "distinct cluster variables");
        // Every variable solves its exchange exactly and has constant
        // coefficient polynomial term 1.
        let n = s.rank();
        for st in &states {
            for v in st.seed.vars() {
                let f = v.specialize_x_one();
                assert_eq!(
                    f.coefficient(&vec![0; n], &vec![0; n]),
                    BigInt::one(),
                    "constant term of the coefficient polynomial"
                );
            }
        }
    }

    #[test]
    fn exploration_limit_is_reported() {
        let s = Surface::annulus(1, 1);
        // The Kronecker exchange graph is infinite; a tiny limit must error.
        assert!(matches!(
            enumerate_seeds(&s, 4),
            Err(ClusterError::ExplorationLimit(4))
        ));
    }

    #[test]
    fn denominator_search_finds_adjacent_variables() {
        let s = Surface::polygon(6);
        let found = find_by_denominator(&s, &[-1, 0, 0], 8).unwrap();
        assert_eq!(found.flips, vec![0]);
        let direct = initial_seed(&s).mutate(0).unwrap();
        assert_eq!(found.variable, direct.vars()[0]);
        // An initial variable is found without any flips.
        let trivial = find_by_denominator(&s, &[0, 1, 0], 8).unwrap();
        assert!(trivial.flips.is_empty());
        assert_eq!(trivial.variable.render(), "x2");
    }

    #[test]
    fn denominator_search_reports_absence() {
        let s = Surface::polygon(6);
        assert!(matches!(
            find_by_denominator(&s, &[-9, -9, -9], 3),
            Err(ClusterError::NotFound { max_depth: 3 })
        ));
    }

    proptest! {
        #[test]
        fn matrix_mutation_is_involutive(
            rows in proptest::collection::vec(
                proptest::collection::vec(-5i64..6, 3),
                6,
            ),
            k in 0usize..3,
        ) {
            let twice = mutate_matrix(&mutate_matrix(&rows, k), k);
            prop_assert_eq!(twice, rows);
        }
    }
}
