//! Triangulated marked surfaces and curves drawn on them.
//!
//! A surface is described combinatorially: a set of named arcs (internal or
//! boundary) and a list of triangles, each given by its three sides in
//! anticlockwise order. A sign on each side records whether the triangle's
//! anticlockwise walk traverses the arc along (`+`) or against (`-`) the
//! arc's own direction. Validation checks that the data glues to a connected
//! oriented surface whose marked points all lie on the boundary.
//!
//! Curves are recorded by their combinatorial route: the triangle they start
//! in and the ordered list of arcs they cross. The triangles visited between
//! crossings are forced by that data, so everything downstream (string
//! modules, path enumeration, expansions) is computed from it.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors from parsing, validating, or manipulating surfaces and curves.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("surface: parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("surface: duplicate arc name {0:?}")]
    DuplicateArc(String),
    #[error("surface: unknown arc {0:?}")]
    UnknownArc(String),
    #[error("surface: triangle {triangle} repeats arc {arc:?}")]
    RepeatedArcInTriangle { triangle: usize, arc: String },
    #[error("surface: internal arc {arc:?} appears in {got} triangle sides, expected exactly 2")]
    InternalArcUsage { arc: String, got: usize },
    #[error("surface: boundary arc {arc:?} appears in {got} triangle sides, expected exactly 1")]
    BoundaryArcUsage { arc: String, got: usize },
    #[error("surface: internal arc {arc:?} is traversed in the same direction by both triangles")]
    SameSignGluing { arc: String },
    #[error("surface: the two sides of internal arc {arc:?} lie in the same triangle")]
    SelfGluedTriangle { arc: String },
    #[error("surface: no triangles")]
    Empty,
    #[error("surface: triangulation is not connected")]
    Disconnected,
    #[error("surface: a marked point does not lie on the boundary (punctures are not supported)")]
    InteriorMarkedPoint,
    #[error("surface: boundary is pinched at a marked point ({incidences} boundary ends meet)")]
    PinchedBoundary { incidences: usize },
    #[error("surface: inconsistent topology: {0}")]
    BadTopology(String),
    #[error("surface: duplicate curve name {0:?}")]
    DuplicateCurve(String),
    #[error("surface: unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("surface: curve {curve:?} starts in triangle {got}, but there are {count} triangles")]
    CurveStartOutOfRange {
        curve: String,
        got: usize,
        count: usize,
    },
    #[error("surface: curve {curve:?} has no crossings")]
    CurveEmpty { curve: String },
    #[error("surface: curve {curve:?} crosses boundary arc {arc:?}")]
    CurveCrossesBoundary { curve: String, arc: String },
    #[error(
        "surface: curve {curve:?}, crossing {step}: arc {arc:?} is not a side of the current triangle"
    )]
    CurveNotASide {
        curve: String,
        step: usize,
        arc: String,
    },
    #[error("surface: curve {curve:?}, crossing {step}: immediate recrossing of arc {arc:?}")]
    CurveBacktracks {
        curve: String,
        step: usize,
        arc: String,
    },
    #[error("surface: flip index {0} out of range")]
    FlipOutOfRange(usize),
}

/// Whether an arc is shared by two triangles or lies on the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Internal,
    Boundary,
}

/// Index into the surface's arc table.
pub type ArcId = usize;

/// One side of a triangle: an arc plus the direction it is traversed in the
/// triangle's anticlockwise boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slot {
    pub arc: ArcId,
    /// True when the walk follows the arc's own direction.
    pub plus: bool,
}

#[derive(Debug, Clone)]
struct Arc {
    name: String,
    kind: ArcKind,
}

/// How a curve runs across the surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveRoute {
    /// The curve is isotopic to an arc of the triangulation (no crossings).
    IsotopicArc(ArcId),
    /// The curve starts at the corner of `start_triangle` opposite its first
    /// crossing and crosses the listed arcs in order.
    Crossings {
        start_triangle: usize,
        arcs: Vec<ArcId>,
    },
}

/// A named curve on a surface.
#[derive(Debug, Clone)]
pub struct Curve {
    pub name: String,
    pub route: CurveRoute,
}

/// Global invariants of a validated surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceStats {
    pub genus: usize,
    pub boundary_components: usize,
    pub marked_points: usize,
    pub internal_arcs: usize,
    pub boundary_arcs: usize,
    pub triangles: usize,
}

/// Structural fingerprint of a triangulation, independent of triangle order,
/// of the rotation of each triangle, and of the chosen arc directions.
pub type TriangulationKey = Vec<[(ArcId, bool); 3]>;

/// A validated triangulated marked surface, possibly with named curves.
#[derive(Debug, Clone)]
pub struct Surface {
    arcs: Vec<Arc>,
    arc_ids: BTreeMap<String, ArcId>,
    triangles: Vec<[Slot; 3]>,
    /// Internal arcs in declaration order; the position in this list is the
    /// arc's exchange direction (0-based).
    internal: Vec<ArcId>,
    /// Inverse of `internal` (None for boundary arcs).
    positions: Vec<Option<usize>>,
    /// For each arc, the (triangle, side) pairs where it occurs.
    occurrences: Vec<Vec<(usize, usize)>>,
    curves: Vec<Curve>,
    stats: SurfaceStats,
}

impl Surface {
    /// Build and validate a surface from arc declarations and triangles given
    /// as `(arc name, traversed along its direction?)` triples in
    /// anticlockwise order.
    pub fn assemble(
        arc_decls: &[(String, ArcKind)],
        triangle_decls: &[[(String, bool); 3]],
    ) -> Result<Self, SurfaceError> {
        let mut arcs = Vec::with_capacity(arc_decls.len());
        let mut arc_ids = BTreeMap::new();
        for (name, kind) in arc_decls {
            if arc_ids.insert(name.clone(), arcs.len()).is_some() {
                return Err(SurfaceError::DuplicateArc(name.clone()));
            }
            arcs.push(Arc {
                name: name.clone(),
                kind: *kind,
            });
        }
        let mut triangles = Vec::with_capacity(triangle_decls.len());
        for decl in triangle_decls {
            let mut slots = [Slot { arc: 0, plus: true }; 3];
            for (i, (name, plus)) in decl.iter().enumerate() {
                let arc = *arc_ids
                    .get(name)
                    .ok_or_else(|| SurfaceError::UnknownArc(name.clone()))?;
                slots[i] = Slot { arc, plus: *plus };
            }
            triangles.push(slots);
        }
        Self::from_parts(arcs, arc_ids, triangles)
    }

    fn from_parts(
        arcs: Vec<Arc>,
        arc_ids: BTreeMap<String, ArcId>,
        triangles: Vec<[Slot; 3]>,
    ) -> Result<Self, SurfaceError> {
        if triangles.is_empty() {
            return Err(SurfaceError::Empty);
        }
        // Distinct arcs within each triangle.
        for (t, slots) in triangles.iter().enumerate() {
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if slots[i].arc == slots[j].arc {
                        return Err(SurfaceError::RepeatedArcInTriangle {
                            triangle: t + 1,
                            arc: arcs[slots[i].arc].name.clone(),
                        });
                    }
                }
            }
        }
        // Occurrence counts and gluing signs.
        let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); arcs.len()];
        for (t, slots) in triangles.iter().enumerate() {
            for (s, slot) in slots.iter().enumerate() {
                occurrences[slot.arc].push((t, s));
            }
        }
        for (id, arc) in arcs.iter().enumerate() {
            let occ = &occurrences[id];
            match arc.kind {
                ArcKind::Internal => {
                    if occ.len() != 2 {
                        return Err(SurfaceError::InternalArcUsage {
                            arc: arc.name.clone(),
                            got: occ.len(),
                        });
                    }
                    let (t0, s0) = occ[0];
                    let (t1, s1) = occ[1];
                    if t0 == t1 {
                        return Err(SurfaceError::SelfGluedTriangle {
                            arc: arc.name.clone(),
                        });
                    }
                    if triangles[t0][s0].plus == triangles[t1][s1].plus {
                        return Err(SurfaceError::SameSignGluing {
                            arc: arc.name.clone(),
                        });
                    }
                }
                ArcKind::Boundary => {
                    if occ.len() != 1 {
                        return Err(SurfaceError::BoundaryArcUsage {
                            arc: arc.name.clone(),
                            got: occ.len(),
                        });
                    }
                }
            }
        }
        // Connectivity of the triangle adjacency graph.
        let mut tri_uf = UnionFind::new(triangles.len());
        for occ in occurrences.iter() {
            if occ.len() == 2 {
                tri_uf.union(occ[0].0, occ[1].0);
            }
        }
        let root = tri_uf.find(0);
        if (0..triangles.len()).any(|t| tri_uf.find(t) != root) {
            return Err(SurfaceError::Disconnected);
        }
        // Marked points: orbits of arc ends under the corner identifications.
        // End 2a is the tail of arc a, end 2a+1 its head; a `+` slot walks
        // tail -> head. Each triangle corner glues the end of one side's walk
        // to the start of the next side's walk.
        let walk_start = |slot: Slot| -> usize {
            if slot.plus {
                2 * slot.arc
            } else {
                2 * slot.arc + 1
            }
        };
        let walk_end = |slot: Slot| -> usize {
            if slot.plus {
                2 * slot.arc + 1
            } else {
                2 * slot.arc
            }
        };
        let mut end_uf = UnionFind::new(2 * arcs.len());
        for slots in &triangles {
            for s in 0..3 {
                end_uf.union(walk_end(slots[s]), walk_start(slots[(s + 1) % 3]));
            }
        }
        let mut orbit_of = vec![usize::MAX; 2 * arcs.len()];
        let mut orbit_count = 0;
        for id in 0..arcs.len() {
            for end in [2 * id, 2 * id + 1] {
                let r = end_uf.find(end);
                if orbit_of[r] == usize::MAX {
                    orbit_of[r] = orbit_count;
                    orbit_count += 1;
                }
            }
        }
        let orbit = |end: usize, uf: &mut UnionFind| orbit_of[uf.find(end)];
        // Each marked point must sit on the boundary, with exactly two
        // boundary-segment ends meeting there.
        let mut boundary_ends = vec![0usize; orbit_count];
        let mut boundary_uf = UnionFind::new(orbit_count);
        for (id, arc) in arcs.iter().enumerate() {
            if arc.kind == ArcKind::Boundary {
                let a = orbit(2 * id, &mut end_uf);
                let b = orbit(2 * id + 1, &mut end_uf);
                boundary_ends[a] += 1;
                boundary_ends[b] += 1;
                boundary_uf.union(a, b);
            }
        }
        for &count in &boundary_ends {
            if count == 0 {
                return Err(SurfaceError::InteriorMarkedPoint);
            }
            if count != 2 {
                return Err(SurfaceError::PinchedBoundary { incidences: count });
            }
        }
        let mut boundary_components = 0;
        for o in 0..orbit_count {
            if boundary_uf.find(o) == o {
                boundary_components += 1;
            }
        }
        // Euler characteristic gives the genus.
        let v = orbit_count as i64;
        let e = arcs.len() as i64;
        let f = triangles.len() as i64;
        let chi = v - e + f;
        let two_g = 2 - boundary_components as i64 - chi;
        if two_g < 0 || two_g % 2 != 0 {
            return Err(SurfaceError::BadTopology(format!(
                "Euler characteristic {chi} with {boundary_components} boundary components"
            )));
        }
        let internal: Vec<ArcId> = (0..arcs.len())
            .filter(|&id| arcs[id].kind == ArcKind::Internal)
            .collect();
        let mut positions = vec![None; arcs.len()];
        for (pos, &id) in internal.iter().enumerate() {
            positions[id] = Some(pos);
        }
        let stats = SurfaceStats {
            genus: (two_g / 2) as usize,
            boundary_components,
            marked_points: orbit_count,
            internal_arcs: internal.len(),
            boundary_arcs: arcs.len() - internal.len(),
            triangles: triangles.len(),
        };
        Ok(Surface {
            arcs,
            arc_ids,
            triangles,
            internal,
            positions,
            occurrences,
            curves: Vec::new(),
            stats,
        })
    }

    /// Attach a named curve after validating its route.
    pub fn add_curve(&mut self, name: &str, route: CurveRoute) -> Result<(), SurfaceError> {
        if self.curves.iter().any(|c| c.name == name) {
            return Err(SurfaceError::DuplicateCurve(name.to_string()));
        }
        match &route {
            CurveRoute::IsotopicArc(arc) => {
                if *arc >= self.arcs.len() {
                    return Err(SurfaceError::UnknownArc(format!("#{arc}")));
                }
            }
            CurveRoute::Crossings {
                start_triangle,
                arcs,
            } => {
                if *start_triangle >= self.triangles.len() {
                    return Err(SurfaceError::CurveStartOutOfRange {
                        curve: name.to_string(),
                        got: *start_triangle + 1,
                        count: self.triangles.len(),
                    });
                }
                if arcs.is_empty() {
                    return Err(SurfaceError::CurveEmpty {
                        curve: name.to_string(),
                    });
                }
                let mut current = *start_triangle;
                for (step, &arc) in arcs.iter().enumerate() {
                    if self.arcs[arc].kind != ArcKind::Internal {
                        return Err(SurfaceError::CurveCrossesBoundary {
                            curve: name.to_string(),
                            arc: self.arcs[arc].name.clone(),
                        });
                    }
                    if step > 0 && arcs[step - 1] == arc {
                        return Err(SurfaceError::CurveBacktracks {
                            curve: name.to_string(),
                            step: step + 1,
                            arc: self.arcs[arc].name.clone(),
                        });
                    }
                    if !self.triangles[current].iter().any(|s| s.arc == arc) {
                        return Err(SurfaceError::CurveNotASide {
                            curve: name.to_string(),
                            step: step + 1,
                            arc: self.arcs[arc].name.clone(),
                        });
                    }
                    current = self.other_triangle(current, arc);
                }
            }
        }
        self.curves.push(Curve {
            name: name.to_string(),
            route,
        });
        Ok(())
    }

    /// The triangle on the other side of an internal arc.
    /// Panics if the arc is not a side of `triangle` or not internal; callers
    /// validate routes first.
    pub fn other_triangle(&self, triangle: usize, arc: ArcId) -> usize {
        let occ = &self.occurrences[arc];
        assert_eq!(occ.len(), 2, "arc is internal");
        if occ[0].0 == triangle {
            occ[1].0
        } else {
            assert_eq!(occ[1].0, triangle, "arc bounds the given triangle");
            occ[0].0
        }
    }

    /// The sequence of triangles a crossing curve passes through, starting
    /// with the one containing its first endpoint (length = crossings + 1).
    pub fn triangle_path(&self, route: &CurveRoute) -> Vec<usize> {
        match route {
            CurveRoute::IsotopicArc(_) => Vec::new(),
            CurveRoute::Crossings {
                start_triangle,
                arcs,
            } => {
                let mut path = Vec::with_capacity(arcs.len() + 1);
                let mut current = *start_triangle;
                path.push(current);
                for &arc in arcs {
                    current = self.other_triangle(current, arc);
                    path.push(current);
                }
                path
            }
        }
    }

    pub fn stats(&self) -> SurfaceStats {
        self.stats
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Number of internal arcs (the rank of the exchange matrix).
    pub fn rank(&self) -> usize {
        self.internal.len()
    }

    pub fn arc_name(&self, arc: ArcId) -> &str {
        &self.arcs[arc].name
    }

    pub fn arc_id(&self, name: &str) -> Option<ArcId> {
        self.arc_ids.get(name).copied()
    }

    pub fn arc_kind(&self, arc: ArcId) -> ArcKind {
        self.arcs[arc].kind
    }

    /// 0-based exchange position of an internal arc.
    pub fn position(&self, arc: ArcId) -> Option<usize> {
        self.positions[arc]
    }

    /// The internal arc at a 0-based exchange position.
    pub fn internal_arc(&self, position: usize) -> ArcId {
        self.internal[position]
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangle(&self, t: usize) -> [Slot; 3] {
        self.triangles[t]
    }

    /// Rotate a triangle's sides so the given arc comes first.
    /// Panics if the arc is not a side; curve routes are validated upstream.
    pub fn triangle_from(&self, t: usize, arc: ArcId) -> [Slot; 3] {
        let slots = self.triangles[t];
        let k = slots
            .iter()
            .position(|s| s.arc == arc)
            .expect("arc is a side of the triangle");
        [slots[k], slots[(k + 1) % 3], slots[(k + 2) % 3]]
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn curve(&self, name: &str) -> Result<&Curve, SurfaceError> {
        self.curves
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| SurfaceError::UnknownCurve(name.to_string()))
    }

    /// Replace the internal arc at an exchange position by the other diagonal
    /// of the quadrilateral around it. The new surface keeps all arc names
    /// (the flipped arc reuses its name) and drops curves, whose routes refer
    /// to the old triangulation.
    pub fn flip(&self, position: usize) -> Result<Surface, SurfaceError> {
        let &arc = self
            .internal
            .get(position)
            .ok_or(SurfaceError::FlipOutOfRange(position))?;
        let occ = &self.occurrences[arc];
        let (plus_side, minus_side) = if self.triangles[occ[0].0][occ[0].1].plus {
            (occ[0], occ[1])
        } else {
            (occ[1], occ[0])
        };
        let a = self.triangle_from(plus_side.0, arc);
        let b = self.triangle_from(minus_side.0, arc);
        let (a1, a2) = (a[1], a[2]);
        let (b1, b2) = (b[1], b[2]);
        let mut triangles = self.triangles.clone();
        triangles[plus_side.0] = [a2, b1, Slot { arc, plus: false }];
        triangles[minus_side.0] = [b2, a1, Slot { arc, plus: true }];
        Self::from_parts(self.arcs.clone(), self.arc_ids.clone(), triangles)
    }

    /// Canonical form of the triangulation: triangles rotated to start at
    /// their smallest arc, sorted, and arc directions renormalized so each
    /// arc is first traversed positively. Two triangulations get the same key
    /// exactly when they glue the same arcs the same way.
    pub fn key(&self) -> TriangulationKey {
        let mut tris: Vec<[(ArcId, bool); 3]> = self
            .triangles
            .iter()
            .map(|slots| {
                let k = (0..3)
                    .min_by_key(|&i| slots[i].arc)
                    .expect("triangle has three sides");
                [
                    (slots[k].arc, slots[k].plus),
                    (slots[(k + 1) % 3].arc, slots[(k + 1) % 3].plus),
                    (slots[(k + 2) % 3].arc, slots[(k + 2) % 3].plus),
                ]
            })
            .collect();
        tris.sort_by_key(|t| [t[0].0, t[1].0, t[2].0]);
        let mut first_sign: BTreeMap<ArcId, bool> = BTreeMap::new();
        for t in &tris {
            for &(arc, plus) in t {
                first_sign.entry(arc).or_insert(plus);
            }
        }
        for t in &mut tris {
            for slot in t.iter_mut() {
                if !first_sign[&slot.0] {
                    slot.1 = !slot.1;
                }
            }
        }
        tris
    }

    /// The canonical document form of the surface: arc declarations in
    /// order, then triangles with slot signs, then curves. [`Surface::parse`]
    /// of the output reproduces the surface exactly.
    pub fn render(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for arc in &self.arcs {
            let kind = match arc.kind {
                ArcKind::Internal => "internal",
                ArcKind::Boundary => "boundary",
            };
            writeln!(out, "arc {} {}", arc.name, kind).expect("write to string");
        }
        for slots in &self.triangles {
            let side = |slot: &Slot| {
                let sign = if slot.plus { '+' } else { '-' };
                format!("{sign}{}", self.arcs[slot.arc].name)
            };
            writeln!(
                out,
                "triangle {} {} {}",
                side(&slots[0]),
                side(&slots[1]),
                side(&slots[2])
            )
            .expect("write to string");
        }
        for curve in &self.curves {
            match &curve.route {
                CurveRoute::IsotopicArc(arc) => {
                    writeln!(out, "curve {} arc {}", curve.name, self.arcs[*arc].name)
                        .expect("write to string");
                }
                CurveRoute::Crossings {
                    start_triangle,
                    arcs,
                } => {
                    let names: Vec<&str> =
                        arcs.iter().map(|a| self.arcs[*a].name.as_str()).collect();
                    writeln!(
                        out,
                        "curve {} from {} crosses {}",
                        curve.name,
                        start_triangle + 1,
                        names.join(" ")
                    )
                    .expect("write to string");
                }
            }
        }
        out
    }

    /// A standard triangulated disk: vertices 1..=c anticlockwise, boundary
    /// segments between consecutive vertices, and the fan of diagonals from
    /// vertex 1. Internal arc `t{k}` joins vertex 1 to vertex k+2.
    pub fn polygon(c: usize) -> Surface {
        assert!(c >= 3, "a polygon needs at least three vertices");
        let mut arcs: Vec<(String, ArcKind)> = Vec::new();
        let n = c - 3;
        for k in 1..=n {
            arcs.push((format!("t{k}"), ArcKind::Internal));
        }
        for i in 1..=c {
            arcs.push((format!("b{i}"), ArcKind::Boundary));
        }
        let mut triangles: Vec<[(String, bool); 3]> = Vec::new();
        if n == 0 {
            triangles.push([
                ("b1".to_string(), true),
                ("b2".to_string(), true),
                ("b3".to_string(), true),
            ]);
        } else {
            triangles.push([
                ("b1".to_string(), true),
                ("b2".to_string(), true),
                ("t1".to_string(), false),
            ]);
            for k in 1..n {
                triangles.push([
                    (format!("t{k}"), true),
                    (format!("b{}", k + 2), true),
                    (format!("t{}", k + 1), false),
                ]);
            }
            triangles.push([
                (format!("t{n}"), true),
                (format!("b{}", c - 1), true),
                (format!("b{c}"), true),
            ]);
        }
        Surface::assemble(&arcs, &triangles).expect("fan-triangulated disk is valid")
    }

    /// A standard triangulated annulus with `p` marked points on the outer
    /// boundary and `q` on the inner one: cut along a seam joining the two
    /// boundaries, fan-triangulate the resulting disk, and reglue. Arc `t1`
    /// is the seam; `t2..` are the fan diagonals.
    pub fn annulus(p: usize, q: usize) -> Surface {
        assert!(
            p >= 1 && q >= 1,
            "each boundary circle needs a marked point"
        );
        let m = p + q + 2;
        let mut arcs: Vec<(String, ArcKind)> = Vec::new();
        for k in 1..=(p + q) {
            arcs.push((format!("t{k}"), ArcKind::Internal));
        }
        for i in 1..=(p + q) {
            arcs.push((format!("b{i}"), ArcKind::Boundary));
        }
        // The cut disk has vertices V0..V_{m-1}: the outer points, a copy of
        // the first outer point, a copy of the first inner point, then the
        // inner points in reverse. Its boundary edges, in order, are the p
        // outer segments, one seam copy, and the q inner segments, with the
        // second seam copy closing up. The fan diagonal V0-Vj is arc t{j}.
        let edge = |i: usize| -> (String, bool) {
            // Edge from V_{i-1} to V_i (1-based; i = m wraps to V0).
            if i <= p {
                (format!("b{i}"), true)
            } else if i == p + 1 {
                ("t1".to_string(), true)
            } else if i < m {
                (format!("b{}", i - 1), true)
            } else {
                ("t1".to_string(), false)
            }
        };
        let diag = |j: usize| -> String { format!("t{j}") };
        let mut triangles: Vec<[(String, bool); 3]> = Vec::new();
        for j in 1..=(m - 2) {
            let first = if j == 1 { edge(1) } else { (diag(j), true) };
            let last = if j == m - 2 {
                edge(m)
            } else {
                (diag(j + 1), false)
            };
            triangles.push([first, edge(j + 1), last]);
        }
        Surface::assemble(&arcs, &triangles).expect("fan-triangulated annulus is valid")
    }

    /// Parse the textual surface format: `arc`, `triangle`, and `curve`
    /// directives, one per line, with `#` comments.
    pub fn parse(text: &str) -> Result<Surface, SurfaceError> {
        let mut arc_decls: Vec<(String, ArcKind)> = Vec::new();
        let mut triangle_decls: Vec<[(String, bool); 3]> = Vec::new();
        let mut curve_decls: Vec<(usize, String, RawRoute)> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(h) => &raw_line[..h],
                None => raw_line,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let err = |msg: String| SurfaceError::Parse { line: line_no, msg };
            match tokens[0] {
                "arc" => {
                    if tokens.len() != 3 {
                        return Err(err("expected: arc <name> internal|boundary".to_string()));
                    }
                    let name = check_name(tokens[1]).map_err(&err)?;
                    let kind = match tokens[2] {
                        "internal" => ArcKind::Internal,
                        "boundary" => ArcKind::Boundary,
                        other => {
                            return Err(err(format!(
                                "expected internal or boundary, found {other:?}"
                            )))
                        }
                    };
                    arc_decls.push((name, kind));
                }
                "triangle" => {
                    if tokens.len() != 4 {
                        return Err(err(
                            "expected: triangle <+/-name> <+/-name> <+/-name>".to_string()
                        ));
                    }
                    let mut sides: Vec<(String, bool)> = Vec::with_capacity(3);
                    for tok in &tokens[1..] {
                        let (plus, rest) = match tok.chars().next() {
                            Some('+') => (true, &tok[1..]),
                            Some('-') => (false, &tok[1..]),
                            _ => {
                                return Err(err(format!(
                                    "triangle side {tok:?} must start with + or -"
                                )))
                            }
                        };
                        sides.push((check_name(rest).map_err(&err)?, plus));
                    }
                    triangle_decls.push([sides[0].clone(), sides[1].clone(), sides[2].clone()]);
                }
                "curve" => {
                    if tokens.len() == 4 && tokens[2] == "arc" {
                        let name = check_name(tokens[1]).map_err(&err)?;
                        let arc = check_name(tokens[3]).map_err(&err)?;
                        curve_decls.push((line_no, name, RawRoute::Arc(arc)));
                    } else if tokens.len() >= 6 && tokens[2] == "from" && tokens[4] == "crosses" {
                        let name = check_name(tokens[1]).map_err(&err)?;
                        let start: usize = tokens[3]
                            .parse()
                            .map_err(|_| err(format!("bad triangle index {:?}", tokens[3])))?;
                        if start == 0 {
                            return Err(err("triangle indices are 1-based".to_string()));
                        }
                        let mut crossings = Vec::new();
                        for tok in &tokens[5..] {
                            crossings.push(check_name(tok).map_err(&err)?);
                        }
                        curve_decls.push((line_no, name, RawRoute::Crossings(start, crossings)));
                    } else {
                        return Err(err(
                            "expected: curve <name> from <triangle> crosses <arcs...> \
                             or curve <name> arc <name>"
                                .to_string(),
                        ));
                    }
                }
                other => return Err(err(format!("unknown directive {other:?}"))),
            }
        }
        let mut surface = Surface::assemble(&arc_decls, &triangle_decls)?;
        for (line, name, raw) in curve_decls {
            let lookup = |arc_name: &str| {
                surface.arc_id(arc_name).ok_or_else(|| SurfaceError::Parse {
                    line,
                    msg: format!("unknown arc {arc_name:?}"),
                })
            };
            let route = match raw {
                RawRoute::Arc(arc_name) => CurveRoute::IsotopicArc(lookup(&arc_name)?),
                RawRoute::Crossings(start, names) => {
                    let mut arcs = Vec::with_capacity(names.len());
                    for n in &names {
                        arcs.push(lookup(n)?);
                    }
                    CurveRoute::Crossings {
                        start_triangle: start - 1,
                        arcs,
                    }
                }
            };
            surface.add_curve(&name, route)?;
        }
        Ok(surface)
    }
}

enum RawRoute {
    Arc(String),
    Crossings(usize, Vec<String>),
}

fn check_name(token: &str) -> Result<String, String> {
    let ok = !token.is_empty()
        && token
            .chars()
            .next()
            .map(|c| c.is_ascii_alphabetic() || c == '_')
            .unwrap_or(false)
        && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(token.to_string())
    } else {
        Err(format!("name {token:?} must match [A-Za-z_][A-Za-z0-9_]*"))
    }
}

impl fmt::Display for SurfaceStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        writeln!(f, "boundary components {}", self.boundary_components)?;
        writeln!(f, "marked points {}", self.marked_points)?;
        writeln!(f, "internal arcs {}", self.internal_arcs)?;
        writeln!(f, "boundary arcs {}", self.boundary_arcs)?;
        write!(f, "triangles {}", self.triangles)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
