use crate::error::GradingError;

/// A finite abelian group `Z_{n1} × … × Z_{nk}`, written additively.
///
/// Elements are indexed little-endian by their residue tuples; index 0 is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<usize>,
    size: usize,
}

impl GradingGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self, GradingError> {
        if orders.contains(&0) {
            return Err(GradingError::Unsupported("cyclic order 0 is not finite".into()));
        }
        let size = orders.iter().product();
        Ok(GradingGroup { orders, size })
    }

    /// The group with one element.
    pub fn trivial() -> Self {
        GradingGroup {
            orders: Vec::new(),
            size: 1,
        }
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn residues(&self, g: usize) -> Vec<usize> {
        crate::algebra::split_index(g, &self.orders)
    }

    pub fn from_residues(&self, residues: &[usize]) -> Option<usize> {
        if residues.len() != self.orders.len() || residues.iter().zip(&self.orders).any(|(r, o)| r >= o) {
            return None;
        }
        Some(crate::algebra::join_index(residues, &self.orders))
    }

    pub fn op(&self, g: usize, h: usize) -> usize {
        let (a, b) = (self.residues(g), self.residues(h));
        let sum: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(&self.orders)
            .map(|((x, y), o)| (x + y) % o)
            .collect();
        crate::algebra::join_index(&sum, &self.orders)
    }

    pub fn inverse(&self, g: usize) -> usize {
        let r = self.residues(g);
        let inv: Vec<usize> = r.iter().zip(&self.orders).map(|(x, o)| (o - x) % o).collect();
        crate::algebra::join_index(&inv, &self.orders)
    }

    /// `g - h`, written `h⁻¹g` multiplicatively.
    pub fn quotient(&self, g: usize, h: usize) -> usize {
        self.op(g, self.inverse(h))
    }
}
