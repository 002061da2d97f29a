//! Coordinate-permutation group actions and orbit enumeration.

use std::collections::HashSet;
use std::hash::Hash;

use super::point::ProjPoint;
use super::subspace::LinearSubspace;

/// Permutation action on homogeneous coordinates, given by generators.
#[derive(Clone, Debug)]
pub struct PermAction {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl PermAction {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), degree, "generator degree mismatch");
            let mut seen = vec![false; degree];
            for &i in g {
                assert!(i < degree && !seen[i], "generator is not a bijection");
                seen[i] = true;
            }
        }
        PermAction { degree, generators }
    }

    /// Full symmetric group on `degree` coordinates (transposition plus
    /// cycle generate it).
    pub fn symmetric(degree: usize) -> Self {
        assert!(degree >= 2);
        let mut swap: Vec<usize> = (0..degree).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::new(degree, vec![swap, cycle])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Order of the full symmetric group of this degree (the only group we
    /// instantiate), for stabilizer bookkeeping.
    pub fn symmetric_order(&self) -> u64 {
        (1..=self.degree as u64).product()
    }
}

/// Anything a coordinate permutation can act on.
pub trait Permutable: Clone + Eq + Hash + Ord {
    fn apply(&self, perm: &[usize]) -> Self;
    fn coord_count(&self) -> usize;
}

impl Permutable for ProjPoint {
    fn apply(&self, perm: &[usize]) -> Self {
        self.permuted(perm)
    }
    fn coord_count(&self) -> usize {
        self.len()
    }
}

impl Permutable for LinearSubspace {
    fn apply(&self, perm: &[usize]) -> Self {
        self.permuted(perm)
    }
    fn coord_count(&self) -> usize {
        self.ambient_coords()
    }
}

/// Orbit of a seed object under the action: breadth-first closure with
/// canonical-form hashing, returned sorted for deterministic reports.
pub fn orbit<T: Permutable>(seed: &T, action: &PermAction) -> Vec<T> {
    assert_eq!(
        seed.coord_count(),
        action.degree(),
        "object dimension must match action degree"
    );
    let mut seen: HashSet<T> = HashSet::new();
    let mut queue = vec![seed.clone()];
    seen.insert(seed.clone());
    while let Some(current) = queue.pop() {
        for g in action.generators() {
            let image = current.apply(g);
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let mut out: Vec<T> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ints;

    #[test]
    fn orbit_of_sign_split_point_has_ten_elements() {
        let s6 = PermAction::symmetric(6);
        let seed = ProjPoint::from_ints(&[1, 1, 1, -1, -1, -1]);
        let orb = orbit(&seed, &s6);
        // 20 sign patterns, identified in pairs by projective scaling.
        assert_eq!(orb.len(), 10);
    }

    #[test]
    fn orbit_of_coordinate_point_has_six_elements() {
        let s6 = PermAction::symmetric(6);
        let seed = ProjPoint::from_ints(&[1, 0, 0, 0, 0, 0]);
        assert_eq!(orbit(&seed, &s6).len(), 6);
    }

    #[test]
    fn orbit_of_matching_plane_has_fifteen_elements() {
        let s6 = PermAction::symmetric(6);
        let seed = LinearSubspace::from_equations(
            6,
            vec![ints(&[1, 1, 0, 0, 0, 0]), ints(&[0, 0, 1, 1, 0, 0]), ints(&[0, 0, 0, 0, 1, 1])],
        );
        let orb = orbit(&seed, &s6);
        assert_eq!(orb.len(), 15);
        // Orbit size divides the group order; stabilizer order 720/15 = 48.
        assert_eq!(s6.symmetric_order() % orb.len() as u64, 0);
        assert_eq!(s6.symmetric_order() / orb.len() as u64, 48);
    }
}
