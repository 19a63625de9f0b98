//! Complete paths along a curve: the geometric route to the expansion.
//!
//! A curve crossing arcs `i_1 .. i_d` is shadowed by paths of `2d+1` arcs:
//! step `2k` crosses `i_k` (either along the curve's direction or against
//! it), and the odd steps in between detour around a corner of the triangle
//! the curve is passing through. Which corner arcs are available depends on
//! the two neighbouring crossing directions; one mixed combination would
//! need a zero-length detour and is geometrically impossible, which is
//! exactly what limits the enumeration.
//!
//! Each path carries a monomial weight: the odd steps contribute their
//! variables (boundary arcs contribute 1), every crossing divides by its
//! variable, and crossings taken along the curve's direction contribute
//! their coefficient variable.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::surface::{ArcId, ArcKind, Curve, CurveRoute, Surface};

/// Errors from assembling paths out of position sets.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    /// The set is not closed, so some corner has no connecting arc.
    #[error("paths: no corner arc between crossings {position} and {}", position + 1)]
    DegenerateCorner { position: usize },
}

/// A complete path: `2d+1` arcs and the direction of each crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletePath {
    /// The arcs traversed; entries at odd indices (1, 3, ...) are the
    /// crossings, in curve order.
    pub steps: Vec<ArcId>,
    /// For each crossing, whether it is traversed in the curve's direction.
    pub oriented: Vec<bool>,
}

impl CompletePath {
    /// Arc names separated by spaces.
    pub fn render(&self, surface: &Surface) -> String {
        self.steps
            .iter()
            .map(|&a| surface.arc_name(a))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The positions crossed in the curve's direction (1-based): the inverse
    /// image of this path under the set-to-path assembly.
    pub fn oriented_positions(&self) -> Vec<usize> {
        (1..=self.oriented.len())
            .filter(|&k| self.oriented[k - 1])
            .collect()
    }
}

/// The data of a curve needed to build its paths: crossings and the
/// triangles passed through.
pub struct CurveGeometry<'a> {
    surface: &'a Surface,
    crossings: Vec<ArcId>,
    /// Triangles visited; length is one more than `crossings` (or empty for
    /// a curve isotopic to an arc).
    triangles: Vec<usize>,
    /// For a crossing-free curve, the arc it is isotopic to.
    isotopic: Option<ArcId>,
}

impl<'a> CurveGeometry<'a> {
    pub fn of(surface: &'a Surface, curve: &Curve) -> CurveGeometry<'a> {
        match &curve.route {
            CurveRoute::IsotopicArc(arc) => CurveGeometry {
                surface,
                crossings: Vec::new(),
                triangles: Vec::new(),
                isotopic: Some(*arc),
            },
            CurveRoute::Crossings { arcs, .. } => CurveGeometry {
                surface,
                crossings: arcs.clone(),
                triangles: surface.triangle_path(&curve.route),
                isotopic: None,
            },
        }
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// The corner arc between crossings `k` and `k+1` (1-based) given their
    /// directions, or `None` when that combination pinches the corner.
    fn corner_arc(&self, k: usize, before: bool, after: bool) -> Option<ArcId> {
        let t = self.triangles[k];
        let a_in = self.crossings[k - 1];
        let a_out = self.crossings[k];
        let rotated = self.surface.triangle_from(t, a_in);
        if rotated[1].arc == a_out {
            // The next crossing follows anticlockwise: the induced arrow
            // points along the curve.
            match (before, after) {
                (true, true) => Some(a_out),
                (false, false) => Some(a_in),
                (false, true) => Some(rotated[2].arc),
                (true, false) => None,
            }
        } else {
            debug_assert_eq!(rotated[2].arc, a_out, "crossings share the triangle");
            // The arrow points against the curve.
            match (before, after) {
                (true, true) => Some(a_in),
                (false, false) => Some(a_out),
                (true, false) => Some(rotated[1].arc),
                (false, true) => None,
            }
        }
    }

    /// The first step: one of the two sides of the starting triangle other
    /// than the first crossing, chosen by the first crossing's direction.
    fn start_arc(&self, first_oriented: bool) -> ArcId {
        let rotated = self
            .surface
            .triangle_from(self.triangles[0], self.crossings[0]);
        if first_oriented {
            rotated[1].arc
        } else {
            rotated[2].arc
        }
    }

    /// The last step, chosen by the last crossing's direction.
    fn end_arc(&self, last_oriented: bool) -> ArcId {
        let d = self.len();
        let rotated = self
            .surface
            .triangle_from(self.triangles[d], self.crossings[d - 1]);
        if last_oriented {
            rotated[1].arc
        } else {
            rotated[2].arc
        }
    }

    /// Build the unique path whose oriented crossings are exactly the given
    /// membership vector. Fails when some corner pinches, i.e. when the
    /// vector is not closed.
    pub fn assemble(&self, oriented: &[bool]) -> Result<CompletePath, PathError> {
        assert_eq!(oriented.len(), self.len());
        if let Some(arc) = self.isotopic {
            return Ok(CompletePath {
                steps: vec![arc],
                oriented: Vec::new(),
            });
        }
        let d = self.len();
        let mut steps = Vec::with_capacity(2 * d + 1);
        steps.push(self.start_arc(oriented[0]));
        for k in 1..=d {
            steps.push(self.crossings[k - 1]);
            if k < d {
                let arc = self
                    .corner_arc(k, oriented[k - 1], oriented[k])
                    .ok_or(PathError::DegenerateCorner { position: k })?;
                steps.push(arc);
            }
        }
        steps.push(self.end_arc(oriented[d - 1]));
        Ok(CompletePath {
            steps,
            oriented: oriented.to_vec(),
        })
    }

    /// All complete paths, ordered by ascending bitmask of their oriented
    /// crossing sets (first crossing = least significant bit).
    pub fn enumerate(&self) -> Vec<CompletePath> {
        if self.is_empty() {
            return vec![self
                .assemble(&[])
                .expect("crossing-free curves have a single path")];
        }
        let d = self.len();
        let mut oriented = vec![false; d];
        let mut out = Vec::new();
        self.enumerate_from(d, &mut oriented, &mut out);
        out
    }

    fn enumerate_from(&self, k: usize, oriented: &mut Vec<bool>, out: &mut Vec<CompletePath>) {
        if k == 0 {
            out.push(
                self.assemble(oriented)
                    .expect("corner arcs exist along the explored branch"),
            );
            return;
        }
        for choice in [false, true] {
            oriented[k - 1] = choice;
            let ok = k == self.len() || self.corner_arc(k, oriented[k - 1], oriented[k]).is_some();
            if ok {
                self.enumerate_from(k - 1, oriented, out);
            }
        }
        oriented[k - 1] = false;
    }

    /// The monomial weight of a path.
    pub fn weight(&self, path: &CompletePath) -> LaurentPoly {
        let n = self.surface.rank();
        let mut xs = vec![0i64; n];
        let mut ys = vec![0u32; n];
        for (i, &arc) in path.steps.iter().enumerate() {
            if i % 2 == 0 {
                if self.surface.arc_kind(arc) == ArcKind::Internal {
                    let pos = self.surface.position(arc).expect("internal arc");
                    xs[pos] += 1;
                }
            } else {
                let pos = self.surface.position(arc).expect("crossings are internal");
                xs[pos] -= 1;
            }
        }
        for (k, &arc) in self.crossings.iter().enumerate() {
            if path.oriented[k] {
                let pos = self.surface.position(arc).expect("crossings are internal");
                ys[pos] += 1;
            }
        }
        LaurentPoly::monomial(n, BigInt::one(), &xs, &ys).expect("exponent lengths match the rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ANNULUS: &str = include_str!("../../../fixtures/annulus.srf");
    const OCTAGON: &str = include_str!("../../../fixtures/octagon.srf");

    fn geometry<'a>(surface: &'a Surface, curve: &str) -> CurveGeometry<'a> {
        CurveGeometry::of(surface, surface.curve(curve).unwrap())
    }

    fn rendered(surface: &Surface, paths: &[CompletePath]) -> Vec<String> {
        paths.iter().map(|p| p.render(surface)).collect()
    }

    #[test]
    fn octagon_paths_and_their_sets() {
        let s = Surface::parse(OCTAGON).unwrap();
        let g = geometry(&s, "gamma");
        let paths = g.enumerate();
        assert_eq!(
            rendered(&s, &paths),
            vec![
                "t9 t2 t3 t3 t3 t5 t6",
                "t1 t2 t8 t3 t3 t5 t6",
                "t9 t2 t3 t3 t4 t5 t7",
                "t1 t2 t8 t3 t4 t5 t7",
                "t1 t2 t2 t3 t5 t5 t7",
            ]
        );
        let sets: Vec<Vec<usize>> = paths.iter().map(|p| p.oriented_positions()).collect();
        assert_eq!(
            sets,
            vec![vec![], vec![1], vec![3], vec![1, 3], vec![1, 2, 3]]
        );
        // Round trip: assembling each path's set returns the path.
        for p in &paths {
            assert_eq!(g.assemble(&p.oriented).unwrap(), *p);
        }
    }

    #[test]
    fn short_annulus_curve_paths() {
        let s = Surface::parse(ANNULUS).unwrap();
        let g = geometry(&s, "gamma2");
        let paths = g.enumerate();
        assert_eq!(
            rendered(&s, &paths),
            vec![
                "t4 t2 t2 t3 t3 t1 t3 t3 t6",
                "t4 t2 t2 t3 t6 t1 t2 t3 t6",
                "t4 t2 t1 t3 t1 t1 t2 t3 t6",
                "t5 t2 t3 t3 t1 t1 t2 t3 t6",
                "t4 t2 t2 t3 t6 t1 t1 t3 t1",
                "t4 t2 t1 t3 t1 t1 t1 t3 t1",
                "t5 t2 t3 t3 t1 t1 t1 t3 t1",
            ]
        );
        let sets: Vec<Vec<usize>> = paths.iter().map(|p| p.oriented_positions()).collect();
        assert_eq!(
            sets,
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
    fn weights_of_short_annulus_paths() {
        let s = Surface::parse(ANNULUS).unwrap();
        let g = geometry(&s, "gamma2");
        let paths = g.enumerate();
        let rendered_weights: Vec<String> = paths.iter().map(|p| g.weight(p).render()).collect();
        assert_eq!(
            rendered_weights,
            vec![
                "x1^-1",
                "x1^-1*x2*x3^-2*y1",
                "x1*x3^-2*y1*y3",
                "x3^-1*y1*y2*y3",
                "x1*x3^-2*y1*y3",
                "x1^3*x2^-1*x3^-2*y1*y3^2",
                "x1^2*x2^-1*x3^-1*y1*y2*y3^2",
            ]
        );
    }

    #[test]
    fn degenerate_corners_reject_non_closed_sets() {
        let s = Surface::parse(ANNULUS).unwrap();
        let g = geometry(&s, "gamma2");
        // {1} is not closed: the first letter points forward out of the set.
        assert_eq!(
            g.assemble(&[true, false, false, false]),
            Err(PathError::DegenerateCorner { position: 1 })
        );
        // {2} fails one corner further along.
        assert_eq!(
            g.assemble(&[false, true, false, false]),
            Err(PathError::DegenerateCorner { position: 2 })
        );
    }

    #[test]
    fn crossing_free_curves_have_one_path() {
        let mut s = Surface::polygon(6);
        let arc = s.arc_id("t2").unwrap();
        s.add_curve("a", CurveRoute::IsotopicArc(arc)).unwrap();
        let g = geometry(&s, "a");
        let paths = g.enumerate();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].render(&s), "t2");
        assert_eq!(g.weight(&paths[0]).render(), "x2");
        // A curve isotopic to a boundary segment weighs 1.
        let mut s2 = Surface::polygon(6);
        let b = s2.arc_id("b1").unwrap();
        s2.add_curve("edge", CurveRoute::IsotopicArc(b)).unwrap();
        let g2 = CurveGeometry::of(&s2, s2.curve("edge").unwrap());
        assert_eq!(g2.weight(&g2.enumerate()[0]).render(), "1");
    }
}
