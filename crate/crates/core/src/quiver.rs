//! The quiver with potential of a triangulation, and its exchange matrix.
//!
//! Each triangle contributes an arrow between every anticlockwise-consecutive
//! pair of its sides that are both internal arcs; a triangle whose three
//! sides are all internal contributes a 3-cycle to the potential. The
//! Jacobian relations of that potential make the path algebra gentle: the
//! composition of any two consecutive arrows of a potential cycle vanishes.
//!
//! Vertices are identified with exchange positions (0-based indices of
//! internal arcs), so the signed arrow count is exactly the exchange matrix:
//! `b[i][j] = #(arrows j -> i) - #(arrows i -> j)`.

use crate::surface::Surface;

/// An arrow of the quiver, remembering the triangle that induces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    /// Source exchange position.
    pub from: usize,
    /// Target exchange position.
    pub to: usize,
    /// Triangle inducing the arrow.
    pub triangle: usize,
    /// Side index (0..3) of the source arc within that triangle.
    pub from_side: usize,
}

/// Quiver with potential attached to a triangulated surface.
#[derive(Debug, Clone)]
pub struct Quiver {
    rank: usize,
    arrows: Vec<Arrow>,
    /// Potential terms: for each fully internal triangle, the indices into
    /// `arrows` of its three arrows, in anticlockwise order.
    cycles: Vec<[usize; 3]>,
}

impl Quiver {
    pub fn of(surface: &Surface) -> Quiver {
        let mut arrows = Vec::new();
        let mut cycles = Vec::new();
        for t in 0..surface.triangle_count() {
            let slots = surface.triangle(t);
            let mut cycle_arrows = Vec::with_capacity(3);
            for s in 0..3 {
                let a = slots[s].arc;
                let b = slots[(s + 1) % 3].arc;
                if let (Some(from), Some(to)) = (surface.position(a), surface.position(b)) {
                    cycle_arrows.push(arrows.len());
                    arrows.push(Arrow {
                        from,
                        to,
                        triangle: t,
                        from_side: s,
                    });
                }
            }
            if cycle_arrows.len() == 3 {
                cycles.push([cycle_arrows[0], cycle_arrows[1], cycle_arrows[2]]);
            }
        }
        Quiver {
            rank: surface.rank(),
            arrows,
            cycles,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn cycles(&self) -> &[[usize; 3]] {
        &self.cycles
    }

    /// Jacobian relations as `(first, then)` arrow index pairs: traversing
    /// `first` and then `then` is zero in the gentle algebra.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut rels = Vec::with_capacity(3 * self.cycles.len());
        for cycle in &self.cycles {
            for i in 0..3 {
                rels.push((cycle[i], cycle[(i + 1) % 3]));
            }
        }
        rels
    }

    /// The arrow a given triangle induces between two exchange positions,
    /// and whether it runs `a -> b` (true) or `b -> a` (false).
    pub fn arrow_in_triangle(&self, triangle: usize, a: usize, b: usize) -> Option<(usize, bool)> {
        for (id, arrow) in self.arrows.iter().enumerate() {
            if arrow.triangle != triangle {
                continue;
            }
            if arrow.from == a && arrow.to == b {
                return Some((id, true));
            }
            if arrow.from == b && arrow.to == a {
                return Some((id, false));
            }
        }
        None
    }

    /// The signed adjacency matrix: `b[i][j] = #(j -> i) - #(i -> j)`.
    pub fn b_matrix(&self) -> Vec<Vec<i64>> {
        let mut b = vec![vec![0i64; self.rank]; self.rank];
        for arrow in &self.arrows {
            b[arrow.to][arrow.from] += 1;
            b[arrow.from][arrow.to] -= 1;
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus_two_one() -> Surface {
        Surface::parse(include_str!("../../../fixtures/annulus.srf")).unwrap()
    }

    #[test]
    fn twice_marked_annulus_matrix() {
        let q = Quiver::of(&annulus_two_one());
        assert_eq!(
            q.b_matrix(),
            vec![vec![0, -1, 2], vec![1, 0, -1], vec![-2, 1, 0]]
        );
    }

    #[test]
    fn twice_marked_annulus_quiver_shape() {
        let s = annulus_two_one();
        let q = Quiver::of(&s);
        // One arrow t1 -> t2, one t2 -> t3, and a double arrow t3 -> t1.
        let mut counts = std::collections::BTreeMap::new();
        for a in q.arrows() {
            *counts.entry((a.from, a.to)).or_insert(0) += 1;
        }
        let pos = |name: &str| s.position(s.arc_id(name).unwrap()).unwrap();
        let (t1, t2, t3) = (pos("t1"), pos("t2"), pos("t3"));
        assert_eq!(counts.get(&(t1, t2)), Some(&1));
        assert_eq!(counts.get(&(t2, t3)), Some(&1));
        assert_eq!(counts.get(&(t3, t1)), Some(&2));
        assert_eq!(q.arrows().len(), 4);
        // Exactly one fully internal triangle, hence one potential cycle and
        // three gentle relations.
        assert_eq!(q.cycles().len(), 1);
        assert_eq!(q.relations().len(), 3);
        // The cycle's relations compose consecutively.
        for (first, then) in q.relations() {
            assert_eq!(q.arrows()[first].to, q.arrows()[then].from);
        }
    }

    #[test]
    fn kronecker_annulus_matrix() {
        let s = Surface::annulus(1, 1);
        let q = Quiver::of(&s);
        let b = q.b_matrix();
        assert_eq!(b[0][1].abs(), 2);
        assert_eq!(b[1][0], -b[0][1]);
        assert_eq!(b[0][0], 0);
        assert_eq!(b[1][1], 0);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn fan_polygon_is_a_path_quiver() {
        let s = Surface::polygon(8);
        let q = Quiver::of(&s);
        let b = q.b_matrix();
        for i in 0..5 {
            for j in 0..5 {
                let expected = if j + 1 == i {
                    -1
                } else if i + 1 == j {
                    1
                } else {
                    0
                };
                assert_eq!(b[i][j], expected, "entry ({i},{j})");
            }
        }
        // No triangle of the fan has three internal sides.
        assert!(q.cycles().is_empty());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn matrix_is_skew_symmetric_for_random_flips() {
        let mut s = Surface::annulus(2, 2);
        for pos in [0usize, 2, 1, 3, 0, 1] {
            s = s.flip(pos).unwrap();
            let b = Quiver::of(&s).b_matrix();
            for i in 0..s.rank() {
                for j in 0..s.rank() {
                    assert_eq!(b[i][j], -b[j][i]);
                }
            }
        }
    }
}
