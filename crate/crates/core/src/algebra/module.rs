use std::sync::Arc;

use crate::error::{AlgebraError, Axiom};

use super::ring::{check_size, flatten_table};
use super::{fingerprint_tables, split_index, join_index, FiniteRing, Fingerprint, Shape};

/// Raw tables for a module given element by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTables {
    pub add: Vec<Vec<usize>>,
    /// `action[r][m]` is the index of `r·m`.
    pub action: Vec<Vec<usize>>,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    /// The ring viewed as a module over itself.
    Ring,
    Product(Vec<ModuleSpec>),
    Explicit(ModuleTables),
}

/// A finite unitary module over a [`FiniteRing`].
#[derive(Debug, Clone)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    action: Vec<usize>,
    zero: usize,
    spec: Option<ModuleSpec>,
    shape: Shape,
    fingerprint: Fingerprint,
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for FiniteModule {}

pub fn build_module(spec: &ModuleSpec, ring: &Arc<FiniteRing>) -> Result<FiniteModule, AlgebraError> {
    let mut module = match spec {
        ModuleSpec::Ring => ring_as_module(ring),
        ModuleSpec::Product(factors) => {
            let built = factors
                .iter()
                .map(|f| build_module(f, ring))
                .collect::<Result<Vec<_>, _>>()?;
            product(&built)?
        }
        ModuleSpec::Explicit(tables) => {
            let module = FiniteModule::from_tables(ring, tables)?;
            module.check_axioms()?;
            module
        }
    };
    module.spec = Some(spec.clone());
    Ok(module)
}

fn ring_as_module(ring: &Arc<FiniteRing>) -> FiniteModule {
    let n = ring.size();
    let add = (0..n * n).map(|k| ring.add(k / n, k % n)).collect();
    let action = (0..n * n).map(|k| ring.mul(k / n, k % n)).collect();
    FiniteModule::assemble(ring, n, add, action, ring.zero(), ring.shape().clone())
}

/// Direct product of modules over the same ring, with little-endian element indices.
pub fn product(factors: &[FiniteModule]) -> Result<FiniteModule, AlgebraError> {
    let first = factors.first().ok_or(AlgebraError::EmptyProduct)?;
    if factors.iter().any(|f| f.ring.fingerprint() != first.ring.fingerprint()) {
        return Err(AlgebraError::CarrierMismatch);
    }
    let ring = first.ring.clone();
    let shape = Shape::Tuple(factors.iter().map(|f| f.shape.clone()).collect());
    let size = shape.size();
    check_size(size)?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.size).collect();
    let mut add = vec![0; size * size];
    let mut action = vec![0; ring.size() * size];
    for a in 0..size {
        let ca = split_index(a, &sizes);
        for b in 0..size {
            let cb = split_index(b, &sizes);
            let s: Vec<usize> = (0..factors.len()).map(|k| factors[k].add(ca[k], cb[k])).collect();
            add[a * size + b] = join_index(&s, &sizes);
        }
        for r in ring.elements() {
            let p: Vec<usize> = (0..factors.len()).map(|k| factors[k].act(r, ca[k])).collect();
            action[r * size + a] = join_index(&p, &sizes);
        }
    }
    let zero = join_index(&factors.iter().map(|f| f.zero).collect::<Vec<_>>(), &sizes);
    Ok(FiniteModule::assemble(&ring, size, add, action, zero, shape))
}

impl FiniteModule {
    /// Builds a module from raw tables without running the axiom scan.
    pub fn from_tables(ring: &Arc<FiniteRing>, tables: &ModuleTables) -> Result<Self, AlgebraError> {
        let size = tables.add.len();
        if size == 0 {
            return Err(AlgebraError::Malformed("empty module".into()));
        }
        check_size(size)?;
        let add = flatten_table(&tables.add, size, size, size, "addition")?;
        let action = flatten_table(&tables.action, size, ring.size(), size, "action")?;
        if tables.zero >= size {
            return Err(AlgebraError::OutOfRange {
                index: tables.zero,
                size,
            });
        }
        Ok(Self::assemble(ring, size, add, action, tables.zero, Shape::Atom(size)))
    }

    pub(crate) fn assemble(
        ring: &Arc<FiniteRing>,
        size: usize,
        add: Vec<usize>,
        action: Vec<usize>,
        zero: usize,
        shape: Shape,
    ) -> Self {
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] == zero).unwrap_or(zero))
            .collect();
        let ring_fp = ring.fingerprint().0 as usize;
        let fingerprint = fingerprint_tables("module", size, &[&add, &action], &[zero, ring_fp]);
        FiniteModule {
            ring: ring.clone(),
            size,
            add,
            neg,
            action,
            zero,
            spec: None,
            shape,
            fingerprint,
        }
    }

    /// Exhaustive scan of the abelian-group and unitary-module axioms.
    pub fn check_axioms(&self) -> Result<(), AlgebraError> {
        let n = self.size;
        let ring = &*self.ring;
        let fail = |axiom, r, s, m, n| Err(AlgebraError::ModuleAxiom { axiom, r, s, m, n });
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(Axiom::AdditiveAssociativity, 0, 0, a, b);
                    }
                }
                if self.add(a, b) != self.add(b, a) {
                    return fail(Axiom::AdditiveCommutativity, 0, 0, a, b);
                }
            }
            if self.add(a, self.zero) != a {
                return fail(Axiom::AdditiveIdentity, 0, 0, a, self.zero);
            }
            if self.add(a, self.neg[a]) != self.zero {
                return fail(Axiom::AdditiveInverse, 0, 0, a, 0);
            }
        }
        for m in 0..n {
            if self.act(ring.one(), m) != m {
                return fail(Axiom::UnitalAction, ring.one(), 0, m, 0);
            }
        }
        for r in ring.elements() {
            for s in ring.elements() {
                for m in 0..n {
                    if self.act(ring.add(r, s), m) != self.add(self.act(r, m), self.act(s, m)) {
                        return fail(Axiom::ScalarAdditivity, r, s, m, 0);
                    }
                    if self.act(ring.mul(r, s), m) != self.act(r, self.act(s, m)) {
                        return fail(Axiom::ActionCompatibility, r, s, m, 0);
                    }
                }
            }
            for m in 0..n {
                for k in 0..n {
                    if self.act(r, self.add(m, k)) != self.add(self.act(r, m), self.act(r, k)) {
                        return fail(Axiom::VectorAdditivity, r, 0, m, k);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn spec(&self) -> Option<&ModuleSpec> {
        self.spec.as_ref()
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn tables(&self) -> ModuleTables {
        ModuleTables {
            add: self.add.chunks(self.size).map(|r| r.to_vec()).collect(),
            action: self.action.chunks(self.size).map(|r| r.to_vec()).collect(),
            zero: self.zero,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_ring, RingSpec};

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(build_ring(&RingSpec::Cyclic(n)).unwrap())
    }

    #[test]
    fn ring_as_module_matches_ring() {
        let r = z(12);
        let m = build_module(&ModuleSpec::Ring, &r).unwrap();
        assert_eq!(m.size(), 12);
        assert_eq!(m.act(5, 7), 11);
        m.check_axioms().unwrap();
    }

    #[test]
    fn product_of_two_copies_has_144_elements() {
        let r = z(12);
        let m = build_module(&ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]), &r)
            .unwrap();
        assert_eq!(m.size(), 144);
        // (2, 1) is stored at 2 + 12; 2·(2,1) = (4,2)
        assert_eq!(m.act(2, 14), 4 + 12 * 2);
    }

    #[test]
    fn non_unital_action_is_rejected() {
        let r = z(2);
        let tables = ModuleTables {
            add: vec![vec![0, 1], vec![1, 0]],
            action: vec![vec![0, 0], vec![0, 0]],
            zero: 0,
        };
        let err = build_module(&ModuleSpec::Explicit(tables), &r).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::ModuleAxiom {
                axiom: Axiom::UnitalAction,
                ..
            }
        ));
    }

    #[test]
    fn small_products_pass_the_axiom_scan() {
        let r = z(4);
        let m = build_module(&ModuleSpec::Product(vec![ModuleSpec::Ring, ModuleSpec::Ring]), &r)
            .unwrap();
        m.check_axioms().unwrap();
    }
}
