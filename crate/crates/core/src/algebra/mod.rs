//! Finite commutative rings and modules as explicit element tables.
//!
//! Every element is a `usize` index into its carrier. Subsets are kept as
//! sorted index sequences, so set equality is sequence equality.

mod module;
mod ring;
mod subset;

pub use module::{build_module, product as module_product, FiniteModule, ModuleSpec, ModuleTables};
pub use ring::{build_ring, Construction, FiniteRing, RingSpec, RingTables};
pub use subset::{
    additive_closure, closure, colon_into_module, colon_into_ring, colon_scalars, colon_within,
    product_set, span, subset_product, AlgebraicSubset, Carrier, ElementSet, SubsetKind,
};

use sha2::{Digest, Sha256};

/// Largest carrier the engine will tabulate.
pub const MAX_CARRIER_SIZE: usize = 256;

/// Content hash of a carrier's tables; subsets record it to detect carrier mix-ups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub u64);

pub(crate) fn fingerprint_tables(tag: &str, size: usize, tables: &[&[usize]], extra: &[usize]) -> Fingerprint {
    let mut h = Sha256::new();
    h.update(tag.as_bytes());
    h.update((size as u64).to_le_bytes());
    for t in tables {
        h.update((t.len() as u64).to_le_bytes());
        for &x in t.iter() {
            h.update((x as u32).to_le_bytes());
        }
    }
    for &x in extra {
        h.update((x as u64).to_le_bytes());
    }
    let digest = h.finalize();
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    Fingerprint(u64::from_le_bytes(bytes))
}

/// How element indices decompose into coordinates.
///
/// Tuples are little-endian: coordinate 0 is the least significant digit,
/// so `(a, b)` over sizes `(p, q)` sits at `a + p·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Atom(usize),
    Tuple(Vec<Shape>),
}

/// A decoded element: a plain index or a tuple of coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementValue {
    Index(usize),
    Tuple(Vec<ElementValue>),
}

impl Shape {
    pub fn size(&self) -> usize {
        match self {
            Shape::Atom(n) => *n,
            Shape::Tuple(parts) => parts.iter().map(Shape::size).product(),
        }
    }

    pub fn decode(&self, index: usize) -> ElementValue {
        match self {
            Shape::Atom(_) => ElementValue::Index(index),
            Shape::Tuple(parts) => {
                let sizes: Vec<usize> = parts.iter().map(Shape::size).collect();
                let coords = split_index(index, &sizes);
                ElementValue::Tuple(parts.iter().zip(coords).map(|(p, c)| p.decode(c)).collect())
            }
        }
    }

    /// Inverse of [`Shape::decode`]. A plain index is accepted for any shape.
    pub fn encode(&self, value: &ElementValue) -> Option<usize> {
        match (self, value) {
            (_, ElementValue::Index(i)) => (*i < self.size()).then_some(*i),
            (Shape::Tuple(parts), ElementValue::Tuple(vals)) if parts.len() == vals.len() => {
                let sizes: Vec<usize> = parts.iter().map(Shape::size).collect();
                let coords = parts
                    .iter()
                    .zip(vals)
                    .map(|(p, v)| p.encode(v))
                    .collect::<Option<Vec<_>>>()?;
                Some(join_index(&coords, &sizes))
            }
            _ => None,
        }
    }
}

impl std::fmt::Display for ElementValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElementValue::Index(i) => write!(f, "{i}"),
            ElementValue::Tuple(vs) => {
                f.write_str("(")?;
                for (k, v) in vs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub(crate) fn split_index(mut x: usize, sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .map(|&s| {
            let c = x % s;
            x /= s;
            c
        })
        .collect()
}

pub(crate) fn join_index(coords: &[usize], sizes: &[usize]) -> usize {
    coords
        .iter()
        .zip(sizes)
        .rev()
        .fold(0, |acc, (&c, &s)| acc * s + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_round_trip_every_index() {
        let shape = Shape::Tuple(vec![Shape::Atom(3), Shape::Tuple(vec![Shape::Atom(2), Shape::Atom(4)])]);
        assert_eq!(shape.size(), 24);
        for i in 0..24 {
            assert_eq!(shape.encode(&shape.decode(i)), Some(i));
        }
        let v = ElementValue::Tuple(vec![
            ElementValue::Index(2),
            ElementValue::Tuple(vec![ElementValue::Index(1), ElementValue::Index(3)]),
        ]);
        assert_eq!(shape.encode(&v), Some(2 + 3 * (1 + 2 * 3)));
        assert_eq!(shape.encode(&ElementValue::Index(24)), None);
    }
}
