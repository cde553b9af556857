//! Core value type: oriented triangulations of a genus-g surface whose
//! marked points all lie on boundary curves.
//!
//! A triangulation is stored as a list of triangles, each an ordered triple
//! of sides. Sides are traversed head-to-tail around each triangle in a
//! globally consistent orientation; glued sides traverse their arc in
//! opposite directions. Boundary arcs are labelled `1..=marks` and the
//! boundary cycle reads the labels in clockwise (ascending) order, so the
//! marked point `a_p` is the tail of boundary arc `alpha_p`.

use std::fmt;
use std::sync::OnceLock;

use crate::canon::CanonicalCode;

/// Topological type of the surface carrying a triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceClass {
    /// Genus of the underlying surface.
    pub genus: u32,
    /// Number of labelled marked points (all on boundary curves).
    pub marks: u32,
    /// Number of boundary curves. Public API surfaces have exactly one;
    /// values with more arise transiently from cutting.
    pub boundaries: u32,
}

impl SurfaceClass {
    pub fn new(genus: u32, marks: u32) -> Self {
        SurfaceClass {
            genus,
            marks,
            boundaries: 1,
        }
    }

    /// Number of triangles a valid triangulation of this class must have:
    /// with all vertices on the boundary, `V = n`, `3F = 2E_int + n`, and
    /// `chi = V - E + F` force `F = n - 2*chi`; for b=1 this is `n + 4g - 2`.
    pub fn triangle_count(&self) -> i64 {
        self.marks as i64 - 2 * self.euler_characteristic()
    }

    /// Number of interior arcs a valid triangulation of this class must
    /// have: `n - 3*chi`; for b=1 this is `n + 6g - 3`.
    pub fn interior_arc_count(&self) -> i64 {
        self.marks as i64 - 3 * self.euler_characteristic()
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundaries as i64
    }

    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.boundaries == 1
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boundaries == 1 {
            write!(f, "(g={}, n={})", self.genus, self.marks)
        } else {
            write!(f, "(g={}, n={}, b={})", self.genus, self.marks, self.boundaries)
        }
    }
}

/// Identity of one interior arc within a single triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(pub u32);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One side of one triangle: either a boundary arc (by 1-based label) or one
/// of the two halves of an interior arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Boundary(u32),
    Interior(ArcId, u8),
}

impl Side {
    pub fn is_boundary(&self) -> bool {
        matches!(self, Side::Boundary(_))
    }

    pub fn arc(&self) -> Option<ArcId> {
        match self {
            Side::Interior(a, _) => Some(*a),
            Side::Boundary(_) => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Boundary(p) => write!(f, "b:{p}"),
            Side::Interior(a, s) => write!(f, "i:{}:{}", a.0, s),
        }
    }
}

/// Position of a side: triangle index and slot within the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideRef {
    pub tri: u32,
    pub slot: u8,
}

impl SideRef {
    pub fn new(tri: u32, slot: u8) -> Self {
        SideRef { tri, slot }
    }
}

/// Raw triangulation data before validation; also the serialization shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationData {
    pub class: SurfaceClass,
    pub triangles: Vec<[Side; 3]>,
}

/// One structural violation found by `validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ArcMultiplicity { arc: ArcId, count: usize },
    ArcHalves { arc: ArcId },
    ArcIdsNotDense { max_id: u32, count: usize },
    BoundaryMultiplicity { label: u32, count: usize },
    BoundaryLabelRange { label: u32, max: u32 },
    TriangleCount { found: usize, expected: i64 },
    InteriorArcCount { found: usize, expected: i64 },
    SelfFolded { arc: ArcId, tri: u32 },
    Disconnected { components: usize },
    InteriorVertex,
    BoundaryCycleOrder { cycle: Vec<u32> },
    BoundaryCycleCount { found: usize, expected: u32 },
    GenusMismatch { computed: i64, expected: u32 },
    BadClass(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArcMultiplicity { arc, count } => {
                write!(f, "arc multiplicity: {arc} occurs {count} times, expected 2")
            }
            Violation::ArcHalves { arc } => {
                write!(f, "arc {arc} does not occur once with side 0 and once with side 1")
            }
            Violation::ArcIdsNotDense { max_id, count } => {
                write!(f, "arc ids not dense: {count} arcs but max id {max_id}")
            }
            Violation::BoundaryMultiplicity { label, count } => {
                write!(f, "boundary arc {label} occurs {count} times, expected 1")
            }
            Violation::BoundaryLabelRange { label, max } => {
                write!(f, "boundary label {label} out of range 1..={max}")
            }
            Violation::TriangleCount { found, expected } => {
                write!(f, "triangle count {found} != n+4g-2 = {expected}")
            }
            Violation::InteriorArcCount { found, expected } => {
                write!(f, "interior arc count {found} != n+6g-3 = {expected}")
            }
            Violation::SelfFolded { arc, tri } => {
                write!(f, "self-folded triangle {tri}: both sides of {arc}")
            }
            Violation::Disconnected { components } => {
                write!(f, "gluing is disconnected: {components} components")
            }
            Violation::InteriorVertex => write!(f, "vertex not on any boundary cycle"),
            Violation::BoundaryCycleOrder { cycle } => {
                write!(f, "boundary cycle does not read labels in clockwise order: {cycle:?}")
            }
            Violation::BoundaryCycleCount { found, expected } => {
                write!(f, "boundary cycle count {found} != {expected}")
            }
            Violation::GenusMismatch { computed, expected } => {
                write!(f, "genus from Euler characteristic {computed} != {expected}")
            }
            Violation::BadClass(msg) => write!(f, "bad class: {msg}"),
        }
    }
}

/// Result of validating a candidate triangulation; empty iff all structural
/// invariants hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "- {v}")?;
            }
            Ok(())
        }
    }
}

/// A validated, immutable triangulation.
///
/// All mutating operations return fresh values. The canonical code is cached
/// on first computation; the fill is idempotent so concurrent fills are safe.
pub struct Triangulation {
    class: SurfaceClass,
    tris: Vec<[Side; 3]>,
    arc_slots: Vec<[SideRef; 2]>,
    bd_slots: Vec<SideRef>,
    code_cache: OnceLock<CanonicalCode>,
}

impl Clone for Triangulation {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(code) = self.code_cache.get() {
            let _ = cache.set(code.clone());
        }
        Triangulation {
            class: self.class,
            tris: self.tris.clone(),
            arc_slots: self.arc_slots.clone(),
            bd_slots: self.bd_slots.clone(),
            code_cache: cache,
        }
    }
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.class == other.class && self.tris == other.tris
    }
}

impl Eq for Triangulation {}

impl std::hash::Hash for Triangulation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.class.hash(state);
        self.tris.hash(state);
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation{} [", self.class)?;
        for (i, t) in self.tris.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({} {} {})", t[0], t[1], t[2])?;
        }
        write!(f, "]")
    }
}

impl Triangulation {
    /// Validates candidate data and builds the triangulation.
    pub fn try_new(data: TriangulationData) -> Result<Self, ValidationReport> {
        let report = validate(&data);
        if !report.is_empty() {
            return Err(report);
        }
        Ok(Self::from_parts(data.class, data.triangles))
    }

    /// Builds from parts that are known to be valid. Validity is re-checked
    /// in debug builds.
    pub(crate) fn from_parts(class: SurfaceClass, tris: Vec<[Side; 3]>) -> Self {
        debug_assert!(
            validate(&TriangulationData {
                class,
                triangles: tris.clone()
            })
            .is_empty(),
            "from_parts on invalid data: {}",
            validate(&TriangulationData {
                class,
                triangles: tris.clone()
            })
        );
        let (arc_slots, bd_slots) = index_slots(&tris)
            .expect("from_parts: inconsistent side occurrences");
        Triangulation {
            class,
            tris,
            arc_slots,
            bd_slots,
            code_cache: OnceLock::new(),
        }
    }

    pub fn class(&self) -> SurfaceClass {
        self.class
    }

    pub fn triangles(&self) -> &[[Side; 3]] {
        &self.tris
    }

    pub fn triangle_count(&self) -> usize {
        self.tris.len()
    }

    pub fn interior_arc_count(&self) -> usize {
        self.arc_slots.len()
    }

    pub fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        (0..self.arc_slots.len() as u32).map(ArcId)
    }

    pub fn side(&self, at: SideRef) -> Side {
        self.tris[at.tri as usize][at.slot as usize]
    }

    /// The two positions of an interior arc, indexed by half.
    pub fn arc_slots(&self, arc: ArcId) -> Option<[SideRef; 2]> {
        self.arc_slots.get(arc.0 as usize).copied()
    }

    /// Position of boundary arc `alpha_label`.
    pub fn boundary_slot(&self, label: u32) -> Option<SideRef> {
        self.bd_slots.get(label as usize - 1).copied()
    }

    pub fn data(&self) -> TriangulationData {
        TriangulationData {
            class: self.class,
            triangles: self.tris.clone(),
        }
    }

    pub(crate) fn code_cache(&self) -> &OnceLock<CanonicalCode> {
        &self.code_cache
    }

    /// Next slot around the triangle, following the orientation.
    pub fn next_in_tri(&self, at: SideRef) -> SideRef {
        SideRef::new(at.tri, (at.slot + 1) % 3)
    }

    pub fn prev_in_tri(&self, at: SideRef) -> SideRef {
        SideRef::new(at.tri, (at.slot + 2) % 3)
    }

    /// The glued twin of an interior side; `None` for boundary sides.
    pub fn twin(&self, at: SideRef) -> Option<SideRef> {
        match self.side(at) {
            Side::Boundary(_) => None,
            Side::Interior(arc, half) => {
                let slots = self.arc_slots[arc.0 as usize];
                Some(slots[1 - half as usize])
            }
        }
    }

    /// Rotates one step around the vertex at the head of `corner`, in the
    /// direction that crosses the side leaving the vertex. `None` when that
    /// side is a boundary arc.
    pub fn corner_next(&self, corner: SideRef) -> Option<SideRef> {
        self.twin(self.next_in_tri(corner))
    }

    /// Rotates the other way, crossing the side arriving at the vertex.
    pub fn corner_prev(&self, corner: SideRef) -> Option<SideRef> {
        self.twin(corner).map(|t| self.prev_in_tri(t))
    }

    /// Label of the vertex at the head of `corner` (the marked point that is
    /// the tail of the boundary arc leaving it).
    pub fn vertex_label_at(&self, corner: SideRef) -> u32 {
        let mut c = corner;
        loop {
            match self.side(self.next_in_tri(c)) {
                Side::Boundary(p) => return p,
                Side::Interior(..) => {
                    c = self.corner_next(c).expect("interior side must have a twin");
                }
            }
        }
    }

    /// Label of the tail vertex of a side.
    pub fn tail_label(&self, at: SideRef) -> u32 {
        self.vertex_label_at(self.prev_in_tri(at))
    }

    /// Label of the head vertex of a side.
    pub fn head_label(&self, at: SideRef) -> u32 {
        self.vertex_label_at(at)
    }

    /// Both endpoint labels of an interior arc (tail, head) of its half 0.
    pub fn arc_endpoints(&self, arc: ArcId) -> (u32, u32) {
        let s = self.arc_slots[arc.0 as usize][0];
        (self.tail_label(s), self.head_label(s))
    }

    /// True when the arc has both endpoints at the same marked point.
    pub fn is_loop_arc(&self, arc: ArcId) -> bool {
        let (t, h) = self.arc_endpoints(arc);
        t == h
    }

    /// Iterates all side positions.
    pub fn side_refs(&self) -> impl Iterator<Item = SideRef> + '_ {
        (0..self.tris.len() as u32)
            .flat_map(|t| (0..3u8).map(move |s| SideRef::new(t, s)))
    }
}

/// Builds the arc and boundary position tables. Fails when occurrences are
/// inconsistent (used by validate before deeper checks).
#[allow(clippy::type_complexity)]
fn index_slots(tris: &[[Side; 3]]) -> Result<(Vec<[SideRef; 2]>, Vec<SideRef>), ()> {
    let mut arc_occ: Vec<[Option<SideRef>; 2]> = Vec::new();
    let mut bd_occ: Vec<Option<SideRef>> = Vec::new();
    for (t, tri) in tris.iter().enumerate() {
        for (s, side) in tri.iter().enumerate() {
            let at = SideRef::new(t as u32, s as u8);
            match *side {
                Side::Boundary(p) => {
                    if p == 0 {
                        return Err(());
                    }
                    let idx = p as usize - 1;
                    if bd_occ.len() <= idx {
                        bd_occ.resize(idx + 1, None);
                    }
                    if bd_occ[idx].replace(at).is_some() {
                        return Err(());
                    }
                }
                Side::Interior(arc, half) => {
                    if half > 1 {
                        return Err(());
                    }
                    let idx = arc.0 as usize;
                    if arc_occ.len() <= idx {
                        arc_occ.resize(idx + 1, [None, None]);
                    }
                    if arc_occ[idx][half as usize].replace(at).is_some() {
                        return Err(());
                    }
                }
            }
        }
    }
    let mut arc_slots = Vec::with_capacity(arc_occ.len());
    for occ in arc_occ {
        match occ {
            [Some(a), Some(b)] => arc_slots.push([a, b]),
            _ => return Err(()),
        }
    }
    let mut bd_slots = Vec::with_capacity(bd_occ.len());
    for occ in bd_occ {
        match occ {
            Some(a) => bd_slots.push(a),
            None => return Err(()),
        }
    }
    Ok((arc_slots, bd_slots))
}

/// Checks every structural invariant of a candidate triangulation and lists
/// all violations. Total: never panics on malformed data.
pub fn validate(data: &TriangulationData) -> ValidationReport {
    let mut report = ValidationReport::default();
    let class = data.class;
    let tris = &data.triangles;

    if class.marks == 0 {
        report
            .violations
            .push(Violation::BadClass("marks must be positive".into()));
    }
    if class.boundaries == 0 {
        report
            .violations
            .push(Violation::BadClass("boundaries must be positive".into()));
    }
    if class.boundaries == 1 && class.genus == 0 && class.marks < 3 {
        report
            .violations
            .push(Violation::BadClass("a disk needs at least 3 marked points".into()));
    }
    if class.marks < class.boundaries {
        report.violations.push(Violation::BadClass(
            "each boundary curve needs at least one marked point".into(),
        ));
    }

    // Occurrence counts for arcs and boundary labels.
    let mut arc_counts: Vec<[usize; 2]> = Vec::new();
    let mut bd_counts: Vec<usize> = vec![0; class.marks as usize];
    let mut bad_labels = false;
    for tri in tris {
        for side in tri {
            match *side {
                Side::Boundary(p) => {
                    if p == 0 || p > class.marks {
                        report.violations.push(Violation::BoundaryLabelRange {
                            label: p,
                            max: class.marks,
                        });
                        bad_labels = true;
                    } else {
                        bd_counts[p as usize - 1] += 1;
                    }
                }
                Side::Interior(arc, half) => {
                    let idx = arc.0 as usize;
                    if arc_counts.len() <= idx {
                        arc_counts.resize(idx + 1, [0, 0]);
                    }
                    arc_counts[idx][(half.min(1)) as usize] += 1;
                }
            }
        }
    }
    let mut structure_ok = !bad_labels;
    let mut num_arcs = 0usize;
    for (i, counts) in arc_counts.iter().enumerate() {
        let total = counts[0] + counts[1];
        if total == 0 {
            continue;
        }
        num_arcs += 1;
        if total != 2 {
            report.violations.push(Violation::ArcMultiplicity {
                arc: ArcId(i as u32),
                count: total,
            });
            structure_ok = false;
        } else if counts[0] != 1 || counts[1] != 1 {
            report.violations.push(Violation::ArcHalves { arc: ArcId(i as u32) });
            structure_ok = false;
        }
    }
    if num_arcs != arc_counts.len() {
        report.violations.push(Violation::ArcIdsNotDense {
            max_id: arc_counts.len() as u32 - 1,
            count: num_arcs,
        });
        structure_ok = false;
    }
    for (i, &count) in bd_counts.iter().enumerate() {
        if count != 1 {
            report.violations.push(Violation::BoundaryMultiplicity {
                label: i as u32 + 1,
                count,
            });
            structure_ok = false;
        }
    }

    let expected_tris = class.triangle_count();
    if tris.len() as i64 != expected_tris {
        report.violations.push(Violation::TriangleCount {
            found: tris.len(),
            expected: expected_tris,
        });
    }
    let expected_arcs = class.interior_arc_count();
    if num_arcs as i64 != expected_arcs {
        report.violations.push(Violation::InteriorArcCount {
            found: num_arcs,
            expected: expected_arcs,
        });
    }

    // Deeper checks need a consistent pairing.
    if !structure_ok {
        return report;
    }
    let Ok((arc_slots, bd_slots)) = index_slots(tris) else {
        return report;
    };

    // Self-folded triangles.
    for (t, tri) in tris.iter().enumerate() {
        for s in 0..3usize {
            if let Side::Interior(arc, half) = tri[s] {
                if half == 0 {
                    let other = arc_slots[arc.0 as usize][1];
                    if other.tri as usize == t {
                        report.violations.push(Violation::SelfFolded {
                            arc,
                            tri: t as u32,
                        });
                    }
                }
            }
        }
    }
    if report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::SelfFolded { .. }))
    {
        // Corner walks still terminate, but the surface is not one the rest
        // of the library handles; report what we know.
    }

    // Connectivity over triangle adjacency.
    if !tris.is_empty() {
        let mut seen = vec![false; tris.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(t) = stack.pop() {
            for s in 0..3u8 {
                if let Side::Interior(arc, half) = tris[t][s as usize] {
                    let other = arc_slots[arc.0 as usize][1 - half as usize];
                    let ot = other.tri as usize;
                    if !seen[ot] {
                        seen[ot] = true;
                        reached += 1;
                        stack.push(ot);
                    }
                }
            }
        }
        if reached != tris.len() {
            let mut components = 1;
            let mut seen2 = seen;
            for start in 0..tris.len() {
                if !seen2[start] {
                    components += 1;
                    let mut stack = vec![start];
                    seen2[start] = true;
                    while let Some(t) = stack.pop() {
                        for s in 0..3u8 {
                            if let Side::Interior(arc, half) = tris[t][s as usize] {
                                let other = arc_slots[arc.0 as usize][1 - half as usize];
                                let ot = other.tri as usize;
                                if !seen2[ot] {
                                    seen2[ot] = true;
                                    stack.push(ot);
                                }
                            }
                        }
                    }
                }
            }
            report.violations.push(Violation::Disconnected { components });
            return report;
        }
    }

    // Corner orbits: every vertex must reach a boundary side in both
    // rotation directions, and boundary walks must read label cycles in
    // clockwise ascending order.
    let helper = WalkHelper {
        tris,
        arc_slots: &arc_slots,
    };
    let total_corners = 3 * tris.len();
    let mut corner_seen = vec![false; total_corners];
    let mut num_vertices = 0usize;
    for t in 0..tris.len() {
        for s in 0..3u8 {
            let corner = SideRef::new(t as u32, s);
            let ci = t * 3 + s as usize;
            if corner_seen[ci] {
                continue;
            }
            // Walk backward to the start of the orbit (or detect a cycle =
            // interior vertex).
            let mut cur = corner;
            let mut steps = 0usize;
            let interior = loop {
                match helper.corner_prev(cur) {
                    Some(prev) => {
                        cur = prev;
                        steps += 1;
                        if steps > total_corners {
                            break true;
                        }
                    }
                    None => break false,
                }
            };
            if interior {
                report.violations.push(Violation::InteriorVertex);
                // Mark the cycle as seen to avoid duplicate reports.
                let mut c = corner;
                loop {
                    let ci = c.tri as usize * 3 + c.slot as usize;
                    if corner_seen[ci] {
                        break;
                    }
                    corner_seen[ci] = true;
                    match helper.corner_prev(c) {
                        Some(prev) => c = prev,
                        None => break,
                    }
                }
                continue;
            }
            num_vertices += 1;
            // Mark the whole orbit forward from the start.
            let mut c = cur;
            loop {
                let ci = c.tri as usize * 3 + c.slot as usize;
                corner_seen[ci] = true;
                match helper.corner_next(c) {
                    Some(next) => c = next,
                    None => break,
                }
            }
        }
    }

    // Boundary cycles: follow label -> next label clockwise.
    let interior_ok = !report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::InteriorVertex));
    if interior_ok {
        let mut next_label = vec![0u32; class.marks as usize];
        let mut label_ok = true;
        for (idx, &at) in bd_slots.iter().enumerate() {
            // The head vertex of alpha_p is the tail of the next boundary
            // arc clockwise; find it by rotating forward from the corner at
            // the head of this side.
            let mut c = at;
            let succ = loop {
                match helper.side(helper.next_in_tri(c)) {
                    Side::Boundary(q) => break q,
                    Side::Interior(..) => match helper.corner_next(c) {
                        Some(n) => c = n,
                        None => unreachable!("interior side has a twin"),
                    },
                }
            };
            next_label[idx] = succ;
            if succ == 0 {
                label_ok = false;
            }
        }
        if label_ok {
            let mut visited = vec![false; class.marks as usize];
            let mut cycles: Vec<Vec<u32>> = Vec::new();
            for start in 1..=class.marks {
                if visited[start as usize - 1] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut p = start;
                loop {
                    if visited[p as usize - 1] {
                        break;
                    }
                    visited[p as usize - 1] = true;
                    cycle.push(p);
                    p = next_label[p as usize - 1];
                }
                cycles.push(cycle);
            }
            if cycles.len() != class.boundaries as usize {
                report.violations.push(Violation::BoundaryCycleCount {
                    found: cycles.len(),
                    expected: class.boundaries,
                });
            }
            for cycle in &cycles {
                // Each cycle must be a consecutive ascending run of labels.
                let ascending = cycle.windows(2).all(|w| w[1] == w[0] + 1);
                if !ascending {
                    report.violations.push(Violation::BoundaryCycleOrder {
                        cycle: cycle.clone(),
                    });
                }
            }
        }
    }

    // Genus from Euler characteristic.
    let v = num_vertices as i64;
    let e = num_arcs as i64 + class.marks as i64;
    let f = tris.len() as i64;
    let chi = v - e + f;
    // chi = 2 - 2g - b
    let two_g = 2 - class.boundaries as i64 - chi;
    if two_g % 2 != 0 || two_g / 2 != class.genus as i64 {
        report.violations.push(Violation::GenusMismatch {
            computed: two_g,
            expected: class.genus,
        });
    }
    if num_vertices as i64 != class.marks as i64 && interior_ok {
        // All vertices lie on boundaries, so the orbit count must equal the
        // number of marked points.
        report.violations.push(Violation::BoundaryCycleCount {
            found: num_vertices,
            expected: class.marks,
        });
    }

    report
}

/// Walk primitives over raw slot tables (used by validate before a
/// `Triangulation` value exists).
struct WalkHelper<'a> {
    tris: &'a [[Side; 3]],
    arc_slots: &'a [[SideRef; 2]],
}

impl WalkHelper<'_> {
    fn side(&self, at: SideRef) -> Side {
        self.tris[at.tri as usize][at.slot as usize]
    }

    fn next_in_tri(&self, at: SideRef) -> SideRef {
        SideRef::new(at.tri, (at.slot + 1) % 3)
    }

    fn prev_in_tri(&self, at: SideRef) -> SideRef {
        SideRef::new(at.tri, (at.slot + 2) % 3)
    }

    fn twin(&self, at: SideRef) -> Option<SideRef> {
        match self.side(at) {
            Side::Boundary(_) => None,
            Side::Interior(arc, half) => Some(self.arc_slots[arc.0 as usize][1 - half as usize]),
        }
    }

    fn corner_next(&self, corner: SideRef) -> Option<SideRef> {
        self.twin(self.next_in_tri(corner))
    }

    fn corner_prev(&self, corner: SideRef) -> Option<SideRef> {
        self.twin(corner).map(|t| self.prev_in_tri(t))
    }
}

/// Returns the sides incident to the vertex at the tail of `start`, in
/// rotation order: the boundary arc leaving the vertex first, then each
/// interior side crossed while rotating toward the boundary arc arriving at
/// the vertex. Every side of the triangulation appears in exactly one walk,
/// so the total length over all vertices is `2*E_int + E_bd`.
pub fn corner_walk(t: &Triangulation, start: SideRef) -> Vec<SideRef> {
    // Corner at the tail of `start`.
    let mut corner = t.prev_in_tri(start);
    // Rotate forward until the leaving side is a boundary arc.
    loop {
        let leaving = t.next_in_tri(corner);
        if t.side(leaving).is_boundary() {
            break;
        }
        corner = t.corner_next(corner).expect("interior side has a twin");
    }
    let mut walk = vec![t.next_in_tri(corner)];
    // Rotate backward, collecting each crossed side, until the arriving side
    // is a boundary arc.
    loop {
        if t.side(corner).is_boundary() {
            break;
        }
        walk.push(corner);
        corner = t.corner_prev(corner).expect("interior side has a twin");
    }
    walk
}

/// The boundary cycles of a triangulation: for each boundary curve, the
/// labels of its arcs in clockwise order starting from the smallest label.
pub fn boundary_cycles(t: &Triangulation) -> Vec<Vec<u32>> {
    let marks = t.class().marks;
    let mut next_label = vec![0u32; marks as usize];
    for label in 1..=marks {
        let at = t.boundary_slot(label).expect("validated boundary label");
        let mut c = at;
        let succ = loop {
            match t.side(t.next_in_tri(c)) {
                Side::Boundary(q) => break q,
                Side::Interior(..) => c = t.corner_next(c).expect("twin"),
            }
        };
        next_label[label as usize - 1] = succ;
    }
    let mut visited = vec![false; marks as usize];
    let mut cycles = Vec::new();
    for start in 1..=marks {
        if visited[start as usize - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !visited[p as usize - 1] {
            visited[p as usize - 1] = true;
            cycle.push(p);
            p = next_label[p as usize - 1];
        }
        cycles.push(cycle);
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn square_disk_is_valid() {
        // Square with one diagonal: triangles (a1 a2 e0') and (e0 a3 a4).
        let class = SurfaceClass::new(0, 4);
        let tris = vec![
            [
                Side::Boundary(1),
                Side::Boundary(2),
                Side::Interior(ArcId(0), 0),
            ],
            [
                Side::Interior(ArcId(0), 1),
                Side::Boundary(3),
                Side::Boundary(4),
            ],
        ];
        let data = TriangulationData {
            class,
            triangles: tris,
        };
        assert!(validate(&data).is_empty(), "{}", validate(&data));
        let t = Triangulation::try_new(data).unwrap();
        assert_eq!(t.interior_arc_count(), 1);
        assert_eq!(boundary_cycles(&t), vec![vec![1, 2, 3, 4]]);
        // The diagonal joins a_3 and a_1: half 0 runs from tail a_3 to head a_1.
        assert_eq!(t.arc_endpoints(ArcId(0)), (3, 1));
    }

    #[test]
    fn wrong_triangle_count_is_reported() {
        let class = SurfaceClass::new(1, 2);
        // Use a (g=0, n=5) shaped triangle list against the (1, 2) class.
        let zig = families::zigzag(5).unwrap();
        let data = TriangulationData {
            class,
            triangles: zig.triangles().to_vec(),
        };
        let report = validate(&data);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::TriangleCount { expected: 4, .. })));
    }

    #[test]
    fn arc_multiplicity_is_reported() {
        let class = SurfaceClass::new(0, 3);
        let tris = vec![[
            Side::Boundary(1),
            Side::Boundary(2),
            Side::Boundary(3),
        ]];
        let mut bad = tris.clone();
        bad[0][2] = Side::Interior(ArcId(0), 0);
        let report = validate(&TriangulationData {
            class,
            triangles: bad,
        });
        assert!(!report.is_empty());
    }

    #[test]
    fn corner_walk_partitions_sides() {
        for (g, n) in [(0u32, 5u32), (0, 7), (1, 3)] {
            let t = if g == 0 {
                families::zigzag(n).unwrap()
            } else {
                families::a_minus(n, &families::torus_core()).unwrap()
            };
            let mut seen = std::collections::HashSet::new();
            let mut total = 0usize;
            for label in 1..=n {
                let start = t.boundary_slot(label).unwrap();
                let walk = corner_walk(&t, start);
                total += walk.len();
                for s in walk {
                    assert!(seen.insert(s), "side {s:?} in two walks");
                }
            }
            let expected = 2 * t.interior_arc_count() + n as usize;
            assert_eq!(total, expected);
            assert_eq!(seen.len(), 3 * t.triangle_count());
        }
    }

    #[test]
    fn torus_core_walk_length() {
        // Single vertex of the (g=1, n=1) triangulation sees every side:
        // 2*4 interior + 1 boundary.
        let t = families::torus_core();
        let walk = corner_walk(&t, t.boundary_slot(1).unwrap());
        assert_eq!(walk.len(), 9);
    }
}
