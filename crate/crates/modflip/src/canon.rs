//! Canonical codes: a complete invariant of a triangulation up to
//! homeomorphisms fixing each labelled marked point.
//!
//! The code comes from a deterministic breadth-first traversal rooted at the
//! triangle carrying boundary arc `alpha_1`. Triangles are discovered in a
//! fixed side order and each gets a rotation anchored at its entry side, so
//! the emitted byte stream is independent of triangle order, arc numbering,
//! and slot rotation of the input value. Two triangulations of the same
//! class have equal codes exactly when a label-preserving isomorphism of
//! their gluing maps exists.
//!
//! For `n <= 2` the marked points do not pin the orientation, so the code of
//! the orientation-mirrored map is also computed and the lexicographic
//! minimum of the two is used. This is configurable via [`MirrorPolicy`].

use std::fmt;

use crate::surface::{ArcId, Side, SideRef, SurfaceClass, Triangulation};

/// Whether orientation-reversing homeomorphisms take part in the quotient
/// for small `n` (they can only exist when `n <= 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MirrorPolicy {
    /// Quotient by the mirror when `n <= 2` (the default reading).
    #[default]
    MirrorSmallN,
    /// Orientation-preserving homeomorphisms only.
    OrientationPreserving,
}

/// Complete invariant of the labelled mapping-class of a triangulation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub class: SurfaceClass,
    pub bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, self.hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("not a one-holed surface: {0} boundary curves")]
    MultiBoundary(u32),
    #[error("class mismatch: {0} vs {1}")]
    ClassMismatch(SurfaceClass, SurfaceClass),
}

/// Renumbering from the input value onto its canonical form.
#[derive(Debug, Clone)]
pub struct CanonicalMap {
    /// `tri_index[old_tri] = new_tri`
    pub tri_index: Vec<u32>,
    /// Rotation applied per old triangle: new slot = (old slot + 3 - rot) % 3.
    pub tri_rot: Vec<u8>,
    /// `arc_index[old_arc] = new_arc`
    pub arc_index: Vec<u32>,
    /// Whether half 0 of each old arc stays half 0 in the canonical value.
    pub arc_half_kept: Vec<bool>,
}

impl CanonicalMap {
    pub fn map_arc(&self, arc: ArcId) -> ArcId {
        ArcId(self.arc_index[arc.0 as usize])
    }

    /// Inverse arc renumbering.
    pub fn arc_preimage(&self) -> Vec<ArcId> {
        let mut inv = vec![ArcId(0); self.arc_index.len()];
        for (old, &new) in self.arc_index.iter().enumerate() {
            inv[new as usize] = ArcId(old as u32);
        }
        inv
    }
}

/// Canonical code of a triangulation under the default mirror policy.
pub fn canonical_code(t: &Triangulation) -> Result<CanonicalCode, CanonError> {
    canonical_code_with(t, MirrorPolicy::default())
}

/// Canonical code under an explicit mirror policy. The code is cached in the
/// value for the default policy.
pub fn canonical_code_with(
    t: &Triangulation,
    policy: MirrorPolicy,
) -> Result<CanonicalCode, CanonError> {
    if t.class().boundaries != 1 {
        return Err(CanonError::MultiBoundary(t.class().boundaries));
    }
    if policy == MirrorPolicy::default() {
        if let Some(code) = t.code_cache().get() {
            return Ok(code.clone());
        }
    }
    let mut code = traversal_code(t);
    if policy == MirrorPolicy::MirrorSmallN && t.class().marks <= 2 {
        let mirrored = mirror(t);
        let mcode = traversal_code(&mirrored);
        if mcode < code {
            code = mcode;
        }
    }
    let code = CanonicalCode {
        class: t.class(),
        bytes: code,
    };
    if policy == MirrorPolicy::default() {
        let _ = t.code_cache().set(code.clone());
    }
    Ok(code)
}

/// True when the two triangulations are the same vertex of the modular
/// flip-graph.
pub fn equivalent(u: &Triangulation, v: &Triangulation) -> Result<bool, CanonError> {
    if u.class() != v.class() {
        return Err(CanonError::ClassMismatch(u.class(), v.class()));
    }
    Ok(canonical_code(u)? == canonical_code(v)?)
}

/// The orientation-mirrored triangulation. Only meaningful as a value of the
/// same class when `n <= 2`: reversing the orientation of a one-holed
/// surface while fixing every marked point forces `n <= 2`, and relabels the
/// boundary arcs (swap of the two arcs when `n = 2`).
pub fn mirror(t: &Triangulation) -> Triangulation {
    let n = t.class().marks;
    assert!(
        t.class().boundaries == 1 && n <= 2,
        "mirror is defined for one-holed surfaces with n <= 2"
    );
    let tris = t
        .triangles()
        .iter()
        .map(|tri| {
            let relabel = |s: Side| match s {
                Side::Boundary(p) if n == 2 => Side::Boundary(3 - p),
                other => other,
            };
            [relabel(tri[2]), relabel(tri[1]), relabel(tri[0])]
        })
        .collect();
    Triangulation::from_parts(t.class(), tris)
}

const TAG_BOUNDARY: u8 = 0;
const TAG_INTERIOR: u8 = 1;

/// Rooted BFS traversal emitting the code bytes, plus the discovery tables.
struct Traversal {
    /// Discovery index per triangle, u32::MAX while undiscovered.
    index: Vec<u32>,
    /// Rotation per triangle: the slot that becomes slot 0.
    rot: Vec<u8>,
    /// Discovery order of triangles.
    order: Vec<u32>,
    bytes: Vec<u8>,
}

fn traverse(t: &Triangulation) -> Traversal {
    let m = t.triangle_count();
    let mut tv = Traversal {
        index: vec![u32::MAX; m],
        rot: vec![0u8; m],
        order: Vec::with_capacity(m),
        bytes: Vec::with_capacity(12 + 9 * m),
    };
    let class = t.class();
    tv.bytes.push(class.genus as u8);
    tv.bytes.extend_from_slice(&(class.marks as u16).to_be_bytes());
    tv.bytes.push(class.boundaries as u8);

    let root = t.boundary_slot(1).expect("alpha_1 exists");
    tv.index[root.tri as usize] = 0;
    tv.rot[root.tri as usize] = root.slot;
    tv.order.push(root.tri);
    let mut head = 0usize;
    while head < tv.order.len() {
        let tri = tv.order[head];
        head += 1;
        let rot = tv.rot[tri as usize];
        for k in 0..3u8 {
            let slot = (rot + k) % 3;
            match t.side(SideRef::new(tri, slot)) {
                Side::Boundary(p) => {
                    tv.bytes.push(TAG_BOUNDARY);
                    tv.bytes.extend_from_slice(&(p as u16).to_be_bytes());
                }
                Side::Interior(..) => {
                    let twin = t.twin(SideRef::new(tri, slot)).expect("twin");
                    let tt = twin.tri as usize;
                    if tv.index[tt] == u32::MAX {
                        tv.index[tt] = tv.order.len() as u32;
                        tv.rot[tt] = twin.slot;
                        tv.order.push(twin.tri);
                    }
                    let rel = (3 + twin.slot - tv.rot[tt]) % 3;
                    tv.bytes.push(TAG_INTERIOR);
                    tv.bytes
                        .extend_from_slice(&(tv.index[tt] as u16).to_be_bytes());
                    tv.bytes.push(rel);
                }
            }
        }
    }
    debug_assert_eq!(tv.order.len(), m, "traversal must reach every triangle");
    tv
}

fn traversal_code(t: &Triangulation) -> Vec<u8> {
    traverse(t).bytes
}

/// The canonical value (triangles in discovery order, rotations anchored,
/// arcs renumbered by first appearance) together with the renumbering.
/// Two triangulations have equal canonical codes exactly when their
/// canonical values are identical as data.
pub fn canonical_value(t: &Triangulation) -> Result<(Triangulation, CanonicalMap), CanonError> {
    if t.class().boundaries != 1 {
        return Err(CanonError::MultiBoundary(t.class().boundaries));
    }
    let tv = traverse(t);
    let m = t.triangle_count();
    let mut arc_index = vec![u32::MAX; t.interior_arc_count()];
    let mut arc_half_kept = vec![true; t.interior_arc_count()];
    let mut next_arc = 0u32;
    let mut tris = vec![[Side::Boundary(0); 3]; m];
    for (new_tri, &old_tri) in tv.order.iter().enumerate() {
        let rot = tv.rot[old_tri as usize];
        for k in 0..3u8 {
            let slot = (rot + k) % 3;
            let side = t.side(SideRef::new(old_tri, slot));
            tris[new_tri][k as usize] = match side {
                Side::Boundary(p) => Side::Boundary(p),
                Side::Interior(arc, half) => {
                    let idx = arc.0 as usize;
                    if arc_index[idx] == u32::MAX {
                        arc_index[idx] = next_arc;
                        next_arc += 1;
                        arc_half_kept[idx] = half == 0;
                    }
                    let new_half = if arc_half_kept[idx] { half } else { 1 - half };
                    Side::Interior(ArcId(arc_index[idx]), new_half)
                }
            };
        }
    }
    let map = CanonicalMap {
        tri_index: tv.index,
        tri_rot: tv.rot,
        arc_index,
        arc_half_kept,
    };
    let value = Triangulation::from_parts(t.class(), tris);
    Ok((value, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::flip;

    #[test]
    fn code_invariant_under_triangle_permutation() {
        let t = families::zigzag(7).unwrap();
        let code = canonical_code(&t).unwrap();
        // Rotate the triangle list and renumber arcs.
        let mut tris = t.triangles().to_vec();
        tris.rotate_left(2);
        let n_arcs = t.interior_arc_count() as u32;
        let perm: Vec<u32> = (0..n_arcs).map(|i| (i + 3) % n_arcs).collect();
        for tri in &mut tris {
            for side in tri.iter_mut() {
                if let Side::Interior(a, h) = side {
                    *side = Side::Interior(ArcId(perm[a.0 as usize]), *h);
                }
            }
        }
        let u = Triangulation::from_parts(t.class(), tris);
        assert_eq!(code, canonical_code(&u).unwrap());
    }

    #[test]
    fn canonical_value_is_idempotent() {
        let t = families::a_minus(4, &families::torus_core()).unwrap();
        let (c1, _) = canonical_value(&t).unwrap();
        let (c2, _) = canonical_value(&c1).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(
            canonical_code(&t).unwrap(),
            canonical_code(&c1).unwrap()
        );
    }

    #[test]
    fn torus_one_mark_neighbors_all_equal() {
        let t = families::torus_core();
        let code = canonical_code(&t).unwrap();
        for n in flip::neighbors(&t) {
            assert_eq!(code, canonical_code(&n).unwrap());
        }
    }

    #[test]
    fn mirror_of_torus_core_is_equivalent() {
        let t = families::torus_core();
        let m = mirror(&t);
        assert!(equivalent(&t, &m).unwrap());
    }

    #[test]
    fn class_mismatch_errors() {
        let u = families::zigzag(5).unwrap();
        let v = families::zigzag(6).unwrap();
        assert!(equivalent(&u, &v).is_err());
    }
}
