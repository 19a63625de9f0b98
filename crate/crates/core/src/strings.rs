//! The string module of a curve, and its submodule-closed position sets.
//!
//! A curve crossing internal arcs `i_1 .. i_d` determines a string over the
//! gentle algebra of the triangulation: one module position per crossing,
//! with consecutive positions joined by the quiver arrow that the triangle
//! between the two crossings induces. The letter joining positions `k` and
//! `k+1` points forward when that arrow runs `i_k -> i_{k+1}` and backward
//! otherwise.
//!
//! A set of positions is *closed* when it is closed under following arrows
//! out of the set: a forward letter forces `k in I => k+1 in I`, a backward
//! letter forces `k+1 in I => k in I`. Closed sets correspond to submodules
//! generated by position subsets, and their count, graded by how often each
//! arc is used, is the `mu` map computed here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::quiver::Quiver;
use crate::surface::{Curve, CurveRoute, Surface};

/// The string module of a curve: crossing positions joined by letters.
#[derive(Debug, Clone)]
pub struct StringModule {
    rank: usize,
    /// Exchange position of the arc crossed at string position k+1.
    arcs: Vec<usize>,
    /// Letter k (0-based) joins string positions k+1 and k+2; true when the
    /// arrow runs forward (towards the later position).
    forward: Vec<bool>,
    /// The triangle witnessing each letter.
    triangles: Vec<usize>,
}

impl StringModule {
    /// Build the string module of a validated curve.
    pub fn of(surface: &Surface, curve: &Curve) -> StringModule {
        let rank = surface.rank();
        let crossings = match &curve.route {
            CurveRoute::IsotopicArc(_) => {
                return StringModule {
                    rank,
                    arcs: Vec::new(),
                    forward: Vec::new(),
                    triangles: Vec::new(),
                }
            }
            CurveRoute::Crossings { arcs, .. } => arcs,
        };
        let path = surface.triangle_path(&curve.route);
        let quiver = Quiver::of(surface);
        let arcs: Vec<usize> = crossings
            .iter()
            .map(|&a| surface.position(a).expect("crossed arcs are internal"))
            .collect();
        let letter_count = arcs.len().saturating_sub(1);
        let mut forward = Vec::with_capacity(letter_count);
        let mut triangles = Vec::with_capacity(letter_count);
        for k in 0..arcs.len().saturating_sub(1) {
            // The triangle between crossings k+1 and k+2 holds both arcs as
            // distinct sides, so it induces exactly one arrow between them.
            let t = path[k + 1];
            let (_, is_forward) = quiver
                .arrow_in_triangle(t, arcs[k], arcs[k + 1])
                .expect("consecutive crossings share a triangle side pair");
            forward.push(is_forward);
            triangles.push(t);
        }
        StringModule {
            rank,
            arcs,
            forward,
            triangles,
        }
    }

    /// Number of positions (crossings of the underlying curve).
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Exchange positions of the crossed arcs, one per string position.
    pub fn arc_positions(&self) -> &[usize] {
        &self.arcs
    }

    /// Letter directions; entry k joins positions k+1 and k+2 (1-based).
    pub fn letters(&self) -> &[bool] {
        &self.forward
    }

    /// Triangles witnessing each letter.
    pub fn letter_triangles(&self) -> &[usize] {
        &self.triangles
    }

    /// Render as arcs joined by directed letters, e.g. `t2 -> t3 <- t1`.
    /// The zero-position string renders as `0`.
    pub fn render(&self, surface: &Surface) -> String {
        if self.arcs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &pos) in self.arcs.iter().enumerate() {
            if k > 0 {
                out.push_str(if self.forward[k - 1] { " -> " } else { " <- " });
            }
            out.push_str(surface.arc_name(surface.internal_arc(pos)));
        }
        out
    }

    /// Is the membership vector closed under following letters out of the
    /// set?
    pub fn is_closed(&self, members: &[bool]) -> bool {
        assert_eq!(members.len(), self.len());
        for (k, &fwd) in self.forward.iter().enumerate() {
            if fwd {
                if members[k] && !members[k + 1] {
                    return false;
                }
            } else if members[k + 1] && !members[k] {
                return false;
            }
        }
        true
    }

    /// All closed position sets (1-based positions), ordered by ascending
    /// bitmask value with position 1 as the least significant bit.
    pub fn closed_subsets(&self) -> Vec<Vec<usize>> {
        let d = self.len();
        let mut members = vec![false; d];
        let mut out = Vec::new();
        self.enumerate_from(d, &mut members, &mut out);
        out
    }

    /// Extend a partial membership choice for positions `k+1..=d` downwards.
    /// Trying "out" before "in" at each position makes the leaves appear in
    /// ascending bitmask order.
    fn enumerate_from(&self, k: usize, members: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(
                (1..=self.len())
                    .filter(|&p| members[p - 1])
                    .collect::<Vec<usize>>(),
            );
            return;
        }
        for choice in [false, true] {
            members[k - 1] = choice;
            // The letter joining k and k+1 can already be checked.
            let ok = if k == self.len() {
                true
            } else if self.forward[k - 1] {
                !(members[k - 1] && !members[k])
            } else {
                !(members[k] && !members[k - 1])
            };
            if ok {
                self.enumerate_from(k - 1, members, out);
            }
        }
        members[k - 1] = false;
    }

    /// Number of closed sets, via a linear scan keeping one count per
    /// membership state of the previous position.
    pub fn count_closed(&self) -> BigInt {
        if self.is_empty() {
            return BigInt::one();
        }
        let (mut out_count, mut in_count) = (BigInt::one(), BigInt::one());
        for &fwd in &self.forward {
            let (next_out, next_in) = if fwd {
                // Forbidden: previous in, next out.
                (out_count.clone(), &out_count + &in_count)
            } else {
                // Forbidden: previous out, next in.
                (&out_count + &in_count, in_count.clone())
            };
            out_count = next_out;
            in_count = next_in;
        }
        out_count + in_count
    }

    /// The arc-multiplicity vector of a closed set: entry j counts the
    /// positions in the set crossing the arc at exchange position j.
    pub fn weight(&self, positions: &[usize]) -> Vec<u32> {
        let mut w = vec![0u32; self.rank];
        for &p in positions {
            w[self.arcs[p - 1]] += 1;
        }
        w
    }

    /// Closed-set counts graded by arc multiplicity: `mu[e]` is the number
    /// of closed sets of weight `e`. Computed by the same linear scan as
    /// [`StringModule::count_closed`], with counts keyed by partial weight.
    pub fn mu(&self) -> BTreeMap<Vec<u32>, BigInt> {
        let zero = vec![0u32; self.rank];
        if self.is_empty() {
            let mut mu = BTreeMap::new();
            mu.insert(zero, BigInt::one());
            return mu;
        }
        let mut out_counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut in_counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        out_counts.insert(zero.clone(), BigInt::one());
        let mut first = zero.clone();
        first[self.arcs[0]] += 1;
        in_counts.insert(first, BigInt::one());
        for (k, &fwd) in self.forward.iter().enumerate() {
            let arc = self.arcs[k + 1];
            let mut next_out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            let mut next_in: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            let add = |map: &mut BTreeMap<Vec<u32>, BigInt>, key: Vec<u32>, v: &BigInt| {
                let slot = map.entry(key).or_insert_with(BigInt::zero);
                *slot += v;
            };
            for (w, c) in &out_counts {
                // Previous position out: the next may always stay out, and
                // may join unless the letter points backward.
                add(&mut next_out, w.clone(), c);
                if fwd {
                    let mut joined = w.clone();
                    joined[arc] += 1;
                    add(&mut next_in, joined, c);
                }
            }
            for (w, c) in &in_counts {
                // Previous position in: the next may always be in, and may
                // stay out unless the letter points forward.
                let mut joined = w.clone();
                joined[arc] += 1;
                add(&mut next_in, joined, c);
                if !fwd {
                    add(&mut next_out, w.clone(), c);
                }
            }
            out_counts = next_out;
            in_counts = next_in;
        }
        let mut mu = out_counts;
        for (w, c) in in_counts {
            let slot = mu.entry(w).or_insert_with(BigInt::zero);
            *slot += c;
        }
        mu
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module_for(text: &str, curve: &str) -> (Surface, StringModule) {
        let s = Surface::parse(text).unwrap();
        let m = StringModule::of(&s, s.curve(curve).unwrap());
        (s, m)
    }

    const ANNULUS: &str = include_str!("../../../fixtures/annulus.srf");
    const OCTAGON: &str = include_str!("../../../fixtures/octagon.srf");

    #[test]
    fn octagon_string_and_closed_sets() {
        let (s, m) = module_for(OCTAGON, "gamma");
        assert_eq!(m.render(&s), "t2 <- t3 -> t5");
        let subsets = m.closed_subsets();
        assert_eq!(
            subsets,
            vec![vec![], vec![1], vec![3], vec![1, 3], vec![1, 2, 3],]
        );
        assert_eq!(m.count_closed(), BigInt::from(5));
    }

    #[test]
    fn short_annulus_string_and_closed_sets() {
        let (s, m) = module_for(ANNULUS, "gamma2");
        assert_eq!(m.render(&s), "t2 -> t3 -> t1 <- t3");
        let subsets = m.closed_subsets();
        assert_eq!(
            subsets,
            vec![
                vec![],
                vec![3],
                vec![2, 3],
                vec![1, 2, 3],
                vec![3, 4],
                vec![2, 3, 4],
                vec![1, 2, 3, 4],
            ]
        );
    }

    #[test]
    fn winding_annulus_curve_has_eighteen_closed_sets() {
        let (s, m) = module_for(ANNULUS, "gamma1");
        assert_eq!(m.render(&s), "t2 -> t3 -> t1 <- t3 -> t1 <- t3");
        let got = m.closed_subsets();
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![3, 5],
            vec![1, 2, 3],
            vec![3, 4, 5],
            vec![1, 2, 3, 5],
            vec![2, 3, 4, 5, 6],
            vec![3],
            vec![2, 3],
            vec![2, 3, 5],
            vec![2, 3, 5, 6],
            vec![2, 3, 4, 5],
            vec![1, 2, 3, 5, 6],
            vec![5],
            vec![5, 6],
            vec![3, 5, 6],
            vec![3, 4, 5, 6],
            vec![1, 2, 3, 4, 5],
            vec![1, 2, 3, 4, 5, 6],
        ];
        let mut expected_sorted = expected.clone();
        expected_sorted.sort_by_key(|set| set.iter().map(|p| 1u64 << (p - 1)).sum::<u64>());
        assert_eq!(got, expected_sorted);
        assert_eq!(got.len(), 18);
        assert_eq!(m.count_closed(), BigInt::from(18));
    }

    #[test]
    fn mu_matches_direct_grouping() {
        let (_, m) = module_for(ANNULUS, "gamma2");
        let mu = m.mu();
        // Weights of the seven closed sets of t2 -> t3 -> t1 <- t3.
        let expect: Vec<(Vec<u32>, i64)> = vec![
            (vec![0, 0, 0], 1),
            (vec![1, 0, 0], 1),
            (vec![1, 0, 1], 2),
            (vec![1, 1, 1], 1),
            (vec![1, 0, 2], 1),
            (vec![1, 1, 2], 1),
        ];
        assert_eq!(mu.len(), expect.len());
        for (w, c) in expect {
            assert_eq!(mu.get(&w), Some(&BigInt::from(c)), "weight {w:?}");
        }
        let total: BigInt = mu.values().sum();
        assert_eq!(total, m.count_closed());
    }

    #[test]
    fn zero_module_for_arc_curves() {
        let mut s = Surface::polygon(6);
        let arc = s.arc_id("t2").unwrap();
        s.add_curve("a", crate::surface::CurveRoute::IsotopicArc(arc))
            .unwrap();
        let m = StringModule::of(&s, s.curve("a").unwrap());
        assert!(m.is_empty());
        assert_eq!(m.render(&s), "0");
        assert_eq!(m.closed_subsets(), vec![Vec::<usize>::new()]);
        assert_eq!(m.count_closed(), BigInt::one());
        let mu = m.mu();
        assert_eq!(mu.len(), 1);
        assert_eq!(mu.get(&vec![0, 0, 0]), Some(&BigInt::one()));
    }

    #[test]
    fn brute_force_agrees_with_enumeration() {
        let (_, m) = module_for(ANNULUS, "gamma1");
        let d = m.len();
        let mut brute = Vec::new();
        for mask in 0u64..(1 << d) {
            let members: Vec<bool> = (0..d).map(|k| mask & (1 << k) != 0).collect();
            if m.is_closed(&members) {
                brute.push((1..=d).filter(|&p| members[p - 1]).collect::<Vec<_>>());
            }
        }
        assert_eq!(m.closed_subsets(), brute);
    }
}
