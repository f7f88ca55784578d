use fixedbitset::FixedBitSet;
use std::fmt;

macro_rules! id_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            bits: FixedBitSet,
        }

        impl $name {
            /// An empty set over the universe `0..universe`.
            pub fn new(universe: usize) -> Self {
                Self { bits: FixedBitSet::with_capacity(universe) }
            }

            /// The set containing every id of the universe.
            pub fn full(universe: usize) -> Self {
                let mut bits = FixedBitSet::with_capacity(universe);
                bits.insert_range(..);
                Self { bits }
            }

            /// Builds a set from ids. Panics if an id is outside the universe.
            pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
                let mut set = Self::new(universe);
                for id in ids {
                    set.insert(id);
                }
                set
            }

            pub fn universe(&self) -> usize {
                self.bits.len()
            }

            pub fn insert(&mut self, id: usize) -> bool {
                assert!(id < self.bits.len(), "id {id} outside universe of {}", self.bits.len());
                !self.bits.put(id)
            }

            pub fn remove(&mut self, id: usize) -> bool {
                if id >= self.bits.len() {
                    return false;
                }
                let was = self.bits.contains(id);
                self.bits.set(id, false);
                was
            }

            pub fn contains(&self, id: usize) -> bool {
                self.bits.contains(id)
            }

            pub fn len(&self) -> usize {
                self.bits.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.bits.is_clear()
            }

            /// Member ids in increasing order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.bits.ones()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn union(&self, other: &Self) -> Self {
                let mut bits = self.bits.clone();
                bits.union_with(&other.bits);
                Self { bits }
            }

            pub fn intersection(&self, other: &Self) -> Self {
                let mut bits = self.bits.clone();
                bits.intersect_with(&other.bits);
                Self { bits }
            }

            pub fn difference(&self, other: &Self) -> Self {
                let mut bits = self.bits.clone();
                bits.difference_with(&other.bits);
                Self { bits }
            }

            pub fn complement(&self) -> Self {
                let mut bits = self.bits.clone();
                bits.toggle_range(..);
                Self { bits }
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.bits.is_disjoint(&other.bits)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.bits.is_subset(&other.bits)
            }

            /// Lowest member, if any.
            pub fn first(&self) -> Option<usize> {
                self.bits.minimum()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl Extend<usize> for $name {
            fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
                for id in iter {
                    self.insert(id);
                }
            }
        }
    };
}

id_set!(
    /// A set of edge ids of one fixed graph.
    EdgeSet
);

id_set!(
    /// A set of vertex ids of one fixed graph.
    VertexSet
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = EdgeSet::from_ids(8, [0, 2, 5]);
        let b = EdgeSet::from_ids(8, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 5]);
        assert_eq!(a.complement().len(), 5);
        assert!(!a.is_disjoint(&b));
        assert_eq!(a.first(), Some(0));
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = VertexSet::new(4);
        assert!(s.insert(1));
        assert!(!s.insert(1));
        assert!(s.remove(1));
        assert!(!s.remove(1));
        assert!(!s.remove(99));
        assert!(s.is_empty());
    }

    #[test]
    #[should_panic]
    fn insert_outside_universe_panics() {
        EdgeSet::new(2).insert(2);
    }
}
