//! The expansion of a curve, computed two independent ways.
//!
//! Route one walks the geometry: enumerate the complete paths shadowing the
//! curve and add up their monomial weights. Route two counts modules: list
//! the closed position sets of the curve's string module, grade them by arc
//! multiplicity, and assemble the same polynomial from the index monomial
//! and one matrix-shifted term per weight. The two routes share nothing but
//! the index prefactor, so their agreement is a strong consistency check --
//! and both can be compared against the variable produced by actual seed
//! mutation along flips.

use thiserror::Error;

use num_bigint::BigInt;

use crate::cluster::{self, ClusterError, FlipSearch};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::paths::{CurveGeometry, PathError};
use crate::quiver::Quiver;
use crate::strings::StringModule;
use crate::surface::{ArcKind, Curve, CurveRoute, Surface};

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("expansion: routes disagree:\n  via paths:  {via_paths}\n  via counts: {via_counts}")]
    RouteMismatch {
        via_paths: String,
        via_counts: String,
    },
    #[error("expansion: result is not homogeneous")]
    Inhomogeneous,
    #[error("expansion: a curve isotopic to a boundary segment has no cluster variable")]
    BoundaryCurve,
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

/// The x-exponent vector of the weight of the all-unoriented path (the
/// unique path with no oriented crossings).
pub fn index_vector(surface: &Surface, curve: &Curve) -> Vec<i64> {
    let geometry = CurveGeometry::of(surface, curve);
    let empty = vec![false; geometry.len()];
    let path = geometry
        .assemble(&empty)
        .expect("the empty set pinches no corner");
    let (xs, _, _) = geometry
        .weight(&path)
        .as_monomial()
        .expect("path weights are monomials");
    xs
}

/// Route one: sum of the weights of all complete paths.
pub fn expand_by_paths(surface: &Surface, curve: &Curve) -> Result<LaurentPoly, ExpansionError> {
    let geometry = CurveGeometry::of(surface, curve);
    let mut sum = LaurentPoly::zero(surface.rank());
    for path in geometry.enumerate() {
        sum = sum.add(&geometry.weight(&path))?;
    }
    Ok(sum)
}

/// Route two: the index monomial times one matrix-shifted term per closed
/// set, graded by arc multiplicity.
pub fn expand_by_counts(surface: &Surface, curve: &Curve) -> Result<LaurentPoly, ExpansionError> {
    let n = surface.rank();
    let ind = index_vector(surface, curve);
    let b = Quiver::of(surface).b_matrix();
    let module = StringModule::of(surface, curve);
    let mut sum = LaurentPoly::zero(n);
    for (weight, count) in module.mu() {
        let xs: Vec<i64> = (0..n)
            .map(|i| ind[i] + (0..n).map(|j| b[i][j] * i64::from(weight[j])).sum::<i64>())
            .collect();
        let term = LaurentPoly::monomial(n, count, &xs, &weight)?;
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

/// Compute both routes and insist they agree.
pub fn expand(surface: &Surface, curve: &Curve) -> Result<LaurentPoly, ExpansionError> {
    let via_paths = expand_by_paths(surface, curve)?;
    let via_counts = expand_by_counts(surface, curve)?;
    if via_paths != via_counts {
        return Err(ExpansionError::RouteMismatch {
            via_paths: via_paths.render(),
            via_counts: via_counts.render(),
        });
    }
    Ok(via_paths)
}

/// The common degree vector of the expansion under the grading
/// `deg(x_i) = e_i`, `deg(y_j) = -(column j)` of the exchange matrix.
pub fn g_vector(surface: &Surface, curve: &Curve) -> Result<Vec<i64>, ExpansionError> {
    let expansion = expand(surface, curve)?;
    let b = Quiver::of(surface).b_matrix();
    expansion
        .degree_of(&b)?
        .ok_or(ExpansionError::Inhomogeneous)
}

/// The expansion with every `x` set to 1.
pub fn f_polynomial(surface: &Surface, curve: &Curve) -> Result<LaurentPoly, ExpansionError> {
    Ok(expand(surface, curve)?.specialize_x_one())
}

/// The per-variable minimum x-exponents the curve's cluster variable must
/// have: the negated crossing counts (or the arc's own exponent vector for a
/// curve isotopic to an internal arc). `Err` for boundary-isotopic curves,
/// which have no cluster variable.
pub fn denominator_target(surface: &Surface, curve: &Curve) -> Result<Vec<i64>, ExpansionError> {
    let n = surface.rank();
    match &curve.route {
        CurveRoute::IsotopicArc(arc) => match surface.arc_kind(*arc) {
            ArcKind::Boundary => Err(ExpansionError::BoundaryCurve),
            ArcKind::Internal => {
                let mut target = vec![0i64; n];
                target[surface.position(*arc).expect("internal arc")] = 1;
                Ok(target)
            }
        },
        CurveRoute::Crossings { arcs, .. } => {
            let mut target = vec![0i64; n];
            for &a in arcs {
                target[surface.position(a).expect("crossings are internal")] -= 1;
            }
            Ok(target)
        }
    }
}

/// Find the curve's cluster variable by flips alone and return it with the
/// flip sequence. This shares no computation with either expansion route.
pub fn variable_by_flips(
    surface: &Surface,
    curve: &Curve,
    max_depth: usize,
) -> Result<FlipSearch, ExpansionError> {
    let target = denominator_target(surface, curve)?;
    Ok(cluster::find_by_denominator(surface, &target, max_depth)?)
}

/// Total number of closed sets (the sum of all `mu` counts).
pub fn closed_set_count(surface: &Surface, curve: &Curve) -> BigInt {
    StringModule::of(surface, curve).count_closed()
}

#[cfg(test)]
mod tests {
    use super::*;

    const ANNULUS: &str = include_str!("../../../fixtures/annulus.srf");
    const OCTAGON: &str = include_str!("../../../fixtures/octagon.srf");

    #[test]
    fn short_annulus_expansion_is_the_six_term_polynomial() {
        let s = Surface::parse(ANNULUS).unwrap();
        let curve = s.curve("gamma2").unwrap();
        let expansion = expand(&s, curve).unwrap();
        assert_eq!(
            expansion.render(),
            "x1^-1 + x1^-1*x2*x3^-2*y1 + 2*x1*x3^-2*y1*y3 + x1^3*x2^-1*x3^-2*y1*y3^2 \
             + x3^-1*y1*y2*y3 + x1^2*x2^-1*x3^-1*y1*y2*y3^2"
        );
        assert_eq!(expansion.term_count(), 6);
        assert_eq!(index_vector(&s, curve), vec![-1, 0, 0]);
        assert_eq!(g_vector(&s, curve).unwrap(), vec![-1, 0, 0]);
        assert_eq!(
            f_polynomial(&s, curve).unwrap().render(),
            "1 + y1 + 2*y1*y3 + y1*y3^2 + y1*y2*y3 + y1*y2*y3^2"
        );
    }

    #[test]
    fn octagon_expansion_routes_agree_and_are_homogeneous() {
        let s = Surface::parse(OCTAGON).unwrap();
        let curve = s.curve("gamma").unwrap();
        let expansion = expand(&s, curve).unwrap();
        assert_eq!(expansion.term_count(), 5);
        assert_eq!(index_vector(&s, curve), vec![0, -1, 1, 0, -1]);
        assert_eq!(g_vector(&s, curve).unwrap(), vec![0, -1, 1, 0, -1]);
    }

    #[test]
    fn flip_search_reproduces_the_short_annulus_expansion() {
        let s = Surface::parse(ANNULUS).unwrap();
        let curve = s.curve("gamma2").unwrap();
        let expansion = expand(&s, curve).unwrap();
        let found = variable_by_flips(&s, curve, 18).unwrap();
        assert_eq!(found.variable, expansion);
        assert!(!found.flips.is_empty());
    }

    #[test]
    fn internal_arc_curves_expand_to_their_variable() {
        let mut s = Surface::polygon(6);
        let arc = s.arc_id("t3").unwrap();
        s.add_curve("a", CurveRoute::IsotopicArc(arc)).unwrap();
        let curve = s.curve("a").unwrap();
        assert_eq!(expand(&s, curve).unwrap().render(), "x3");
        assert_eq!(index_vector(&s, curve), vec![0, 0, 1]);
        let found = variable_by_flips(&s, curve, 4).unwrap();
        assert!(found.flips.is_empty());
        assert_eq!(found.variable.render(), "x3");
    }

    #[test]
    fn boundary_curves_have_no_denominator_target() {
        let mut s = Surface::polygon(6);
        let b = s.arc_id("b2").unwrap();
        s.add_curve("edge", CurveRoute::IsotopicArc(b)).unwrap();
        let curve = s.curve("edge").unwrap();
        assert_eq!(expand(&s, curve).unwrap().render(), "1");
        assert!(matches!(
            denominator_target(&s, curve),
            Err(ExpansionError::BoundaryCurve)
        ));
    }

    #[test]
    fn reversal_leaves_the_expansion_unchanged() {
        let s = Surface::parse(ANNULUS).unwrap();
        let mut reversed_surface = s.clone();
        let curve = s.curve("gamma1").unwrap();
        let arcs = match &curve.route {
            CurveRoute::Crossings { arcs, .. } => arcs.clone(),
            _ => unreachable!(),
        };
        let path = s.triangle_path(&curve.route);
        let reversed = CurveRoute::Crossings {
            start_triangle: *path.last().unwrap(),
            arcs: arcs.iter().rev().copied().collect(),
        };
        reversed_surface.add_curve("rev", reversed).unwrap();
        assert_eq!(
            expand(&s, curve).unwrap(),
            expand(&reversed_surface, reversed_surface.curve("rev").unwrap()).unwrap()
        );
    }
}
