//! The flip operation and neighbor enumeration in the flip-graph.
//!
//! Flipping replaces an interior arc by the other diagonal of the
//! quadrilateral formed by its two incident triangles. The introduced arc
//! reuses the flipped arc's id, so replaying a recorded move list is
//! deterministic and reversing a path just reverses the list.

use crate::surface::{ArcId, Side, SideRef, Triangulation};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FlipError {
    #[error("no such arc: {0}")]
    NoSuchArc(ArcId),
    #[error("flip blocked: both sides of {0} lie in one triangle")]
    Blocked(ArcId),
}

/// True iff the two sides of `e` lie in distinct triangles. On valid
/// triangulations of surfaces without interior marked points this holds for
/// every interior arc.
pub fn flippable(t: &Triangulation, e: ArcId) -> Result<bool, FlipError> {
    let slots = t.arc_slots(e).ok_or(FlipError::NoSuchArc(e))?;
    Ok(slots[0].tri != slots[1].tri)
}

/// Flips arc `e`: with the incident triangles written `(e0, b, c)` and
/// `(e1, d, f)` in orientation order, the result contains `(e0', c, d)` and
/// `(e1', f, b)`. The new diagonal keeps the id `e`.
pub fn flip(t: &Triangulation, e: ArcId) -> Result<Triangulation, FlipError> {
    let slots = t.arc_slots(e).ok_or(FlipError::NoSuchArc(e))?;
    let [s0, s1] = slots;
    if s0.tri == s1.tri {
        return Err(FlipError::Blocked(e));
    }
    let rotated = |at: SideRef| -> [Side; 3] {
        let tri = &t.triangles()[at.tri as usize];
        [
            tri[at.slot as usize],
            tri[(at.slot as usize + 1) % 3],
            tri[(at.slot as usize + 2) % 3],
        ]
    };
    let [e0, b, c] = rotated(s0);
    let [e1, d, f] = rotated(s1);
    debug_assert_eq!(e0.arc(), Some(e));
    debug_assert_eq!(e1.arc(), Some(e));
    let mut tris = t.triangles().to_vec();
    tris[s0.tri as usize] = [e0, c, d];
    tris[s1.tri as usize] = [e1, f, b];
    Ok(Triangulation::from_parts(t.class(), tris))
}

/// All raw flip neighbors, one per interior arc, in arc-id order. Consumers
/// deduplicate by canonical code and drop self-loops.
pub fn neighbors(t: &Triangulation) -> Vec<Triangulation> {
    t.arc_ids()
        .map(|e| flip(t, e).expect("every interior arc of a valid triangulation is flippable"))
        .collect()
}

/// An ordered list of flips replayable from a start triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipPath {
    pub start: Triangulation,
    pub moves: Vec<ArcId>,
}

impl FlipPath {
    pub fn empty(start: Triangulation) -> Self {
        FlipPath {
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the moves, checking validity after every step, and returns
    /// the final triangulation.
    pub fn replay(&self) -> Result<Triangulation, FlipError> {
        let mut cur = self.start.clone();
        for &e in &self.moves {
            cur = flip(&cur, e)?;
        }
        Ok(cur)
    }

    /// Every intermediate triangulation, including both endpoints.
    pub fn states(&self) -> Result<Vec<Triangulation>, FlipError> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(self.start.clone());
        for &e in &self.moves {
            let next = flip(out.last().unwrap(), e)?;
            out.push(next);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::families;
    use crate::surface::{validate, SurfaceClass, TriangulationData};

    fn square() -> Triangulation {
        let class = SurfaceClass::new(0, 4);
        Triangulation::try_new(TriangulationData {
            class,
            triangles: vec![
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
            ],
        })
        .unwrap()
    }

    #[test]
    fn square_diagonal_is_flippable() {
        let t = square();
        assert!(flippable(&t, ArcId(0)).unwrap());
        assert_eq!(
            flippable(&t, ArcId(7)),
            Err(FlipError::NoSuchArc(ArcId(7)))
        );
    }

    #[test]
    fn square_flip_gives_other_diagonal() {
        let t = square();
        let u = flip(&t, ArcId(0)).unwrap();
        assert!(validate(&u.data()).is_empty());
        // Diagonal was (3,1); the square's only other triangulation has (2,4)
        // (as an unordered pair of endpoint labels).
        let (a, b) = u.arc_endpoints(ArcId(0));
        let mut ends = [a, b];
        ends.sort();
        assert_eq!(ends, [2, 4]);
        assert_ne!(
            canonical_code(&t).unwrap(),
            canonical_code(&u).unwrap()
        );
    }

    #[test]
    fn flip_is_involution_up_to_code() {
        let t = families::a_minus(3, &families::torus_core()).unwrap();
        let code = canonical_code(&t).unwrap();
        for e in t.arc_ids() {
            let u = flip(&t, e).unwrap();
            let back = flip(&u, e).unwrap();
            assert_eq!(code, canonical_code(&back).unwrap(), "arc {e}");
        }
    }

    #[test]
    fn neighbor_count_is_interior_arc_count() {
        let t = families::zigzag(8).unwrap();
        assert_eq!(neighbors(&t).len(), t.interior_arc_count());
    }

    #[test]
    fn pentagon_neighbors_all_distinct() {
        let t = families::zigzag(5).unwrap();
        let mut codes: Vec<_> = neighbors(&t)
            .iter()
            .map(|u| canonical_code(u).unwrap())
            .collect();
        codes.push(canonical_code(&t).unwrap());
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 3); // t plus 2 distinct neighbors (pentagon has 2 arcs)
    }

    #[test]
    fn path_replay_counts_moves() {
        let t = families::zigzag(6).unwrap();
        let path = FlipPath {
            start: t.clone(),
            moves: vec![ArcId(0), ArcId(1), ArcId(0)],
        };
        let end = path.replay().unwrap();
        assert!(validate(&end.data()).is_empty());
        assert_eq!(path.states().unwrap().len(), 4);
    }
}
