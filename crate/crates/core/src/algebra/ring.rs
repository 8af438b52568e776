use crate::error::{AlgebraError, Axiom};

use super::{fingerprint_tables, Fingerprint, Shape, MAX_CARRIER_SIZE};

/// Raw Cayley tables for a ring given element by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

/// How a ring is to be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Cyclic(usize),
    Product(Vec<RingSpec>),
    /// Group ring `C[G]` over a finite abelian group given by its cyclic orders.
    GroupRing {
        coefficients: Box<RingSpec>,
        group: Vec<usize>,
    },
    Explicit(RingTables),
}

/// Construction tag kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Cyclic(usize),
    Product(Vec<Construction>),
    GroupRing {
        coefficients: Box<Construction>,
        group: Vec<usize>,
    },
    Explicit,
    Localized,
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Construction::Cyclic(n) => write!(f, "Z{n}"),
            Construction::Product(fs) => {
                for (i, c) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            Construction::GroupRing {
                coefficients,
                group,
            } => {
                write!(f, "{coefficients}[")?;
                for (i, o) in group.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "Z{o}")?;
                }
                f.write_str("]")
            }
            Construction::Explicit => f.write_str("explicit"),
            Construction::Localized => f.write_str("localized"),
        }
    }
}

/// A finite commutative ring with identity, stored as flat Cayley tables.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    construction: Construction,
    spec: Option<RingSpec>,
    shape: Shape,
    fingerprint: Fingerprint,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for FiniteRing {}

pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing, AlgebraError> {
    let mut ring = match spec {
        RingSpec::Cyclic(n) => cyclic(*n)?,
        RingSpec::Product(factors) => {
            let built = factors
                .iter()
                .map(build_ring)
                .collect::<Result<Vec<_>, _>>()?;
            product(&built)?
        }
        RingSpec::GroupRing {
            coefficients,
            group,
        } => group_ring(&build_ring(coefficients)?, group)?,
        RingSpec::Explicit(tables) => {
            let ring = FiniteRing::from_tables(tables, Construction::Explicit)?;
            ring.check_axioms()?;
            ring
        }
    };
    ring.spec = Some(spec.clone());
    Ok(ring)
}

fn cyclic(n: usize) -> Result<FiniteRing, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::BadModulus(n));
    }
    check_size(n)?;
    let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let mul = (0..n * n).map(|k| (k / n) * (k % n) % n).collect();
    Ok(FiniteRing::assemble(
        n,
        add,
        mul,
        0,
        1,
        Construction::Cyclic(n),
        Shape::Atom(n),
    ))
}

fn product(factors: &[FiniteRing]) -> Result<FiniteRing, AlgebraError> {
    if factors.is_empty() {
        return Err(AlgebraError::EmptyProduct);
    }
    let shape = Shape::Tuple(factors.iter().map(|f| f.shape.clone()).collect());
    let size = shape.size();
    check_size(size)?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.size).collect();
    let split = |x: usize| super::split_index(x, &sizes);
    let join = |coords: &[usize]| super::join_index(coords, &sizes);
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        let ca = split(a);
        for b in 0..size {
            let cb = split(b);
            let s: Vec<usize> = (0..factors.len())
                .map(|k| factors[k].add(ca[k], cb[k]))
                .collect();
            let p: Vec<usize> = (0..factors.len())
                .map(|k| factors[k].mul(ca[k], cb[k]))
                .collect();
            add[a * size + b] = join(&s);
            mul[a * size + b] = join(&p);
        }
    }
    let zero = join(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
    let one = join(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
    Ok(FiniteRing::assemble(
        size,
        add,
        mul,
        zero,
        one,
        Construction::Product(factors.iter().map(|f| f.construction.clone()).collect()),
        shape,
    ))
}

fn group_ring(coeffs: &FiniteRing, orders: &[usize]) -> Result<FiniteRing, AlgebraError> {
    let group = crate::grading::GradingGroup::new(orders.to_vec())
        .map_err(|e| AlgebraError::Malformed(e.to_string()))?;
    let g = group.size();
    let shape = Shape::Tuple(vec![coeffs.shape.clone(); g]);
    let size = shape.size();
    check_size(size)?;
    let sizes = vec![coeffs.size; g];
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        let ca = super::split_index(a, &sizes);
        for b in 0..size {
            let cb = super::split_index(b, &sizes);
            let s: Vec<usize> = (0..g).map(|k| coeffs.add(ca[k], cb[k])).collect();
            let mut p = vec![coeffs.zero; g];
            for (x, &cx) in ca.iter().enumerate() {
                for (y, &cy) in cb.iter().enumerate() {
                    let xy = group.op(x, y);
                    p[xy] = coeffs.add(p[xy], coeffs.mul(cx, cy));
                }
            }
            add[a * size + b] = super::join_index(&s, &sizes);
            mul[a * size + b] = super::join_index(&p, &sizes);
        }
    }
    let mut zero_c = vec![coeffs.zero; g];
    let zero = super::join_index(&zero_c, &sizes);
    zero_c[0] = coeffs.one;
    let one = super::join_index(&zero_c, &sizes);
    Ok(FiniteRing::assemble(
        size,
        add,
        mul,
        zero,
        one,
        Construction::GroupRing {
            coefficients: Box::new(coeffs.construction.clone()),
            group: orders.to_vec(),
        },
        shape,
    ))
}

pub(crate) fn check_size(size: usize) -> Result<(), AlgebraError> {
    if size > MAX_CARRIER_SIZE {
        Err(AlgebraError::TooLarge {
            size,
            limit: MAX_CARRIER_SIZE,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn flatten_table(
    rows: &[Vec<usize>],
    width: usize,
    height: usize,
    range: usize,
    name: &str,
) -> Result<Vec<usize>, AlgebraError> {
    if rows.len() != height || rows.iter().any(|r| r.len() != width) {
        return Err(AlgebraError::Malformed(format!(
            "{name} table must be {height}x{width}"
        )));
    }
    let flat: Vec<usize> = rows.iter().flatten().copied().collect();
    if let Some(&bad) = flat.iter().find(|&&x| x >= range) {
        return Err(AlgebraError::OutOfRange {
            index: bad,
            size: range,
        });
    }
    Ok(flat)
}

impl FiniteRing {
    /// Builds a ring from raw tables without running the axiom scan.
    pub fn from_tables(tables: &RingTables, construction: Construction) -> Result<Self, AlgebraError> {
        let size = tables.add.len();
        if size == 0 {
            return Err(AlgebraError::Malformed("empty ring".into()));
        }
        check_size(size)?;
        let add = flatten_table(&tables.add, size, size, size, "addition")?;
        let mul = flatten_table(&tables.mul, size, size, size, "multiplication")?;
        for x in [tables.zero, tables.one] {
            if x >= size {
                return Err(AlgebraError::OutOfRange { index: x, size });
            }
        }
        Ok(Self::assemble(
            size,
            add,
            mul,
            tables.zero,
            tables.one,
            construction,
            Shape::Atom(size),
        ))
    }

    pub(crate) fn assemble(
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        construction: Construction,
        shape: Shape,
    ) -> Self {
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] == zero).unwrap_or(zero))
            .collect();
        let fingerprint = fingerprint_tables("ring", size, &[&add, &mul], &[zero, one]);
        FiniteRing {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            construction,
            spec: None,
            shape,
            fingerprint,
        }
    }

    /// Exhaustive scan of the commutative-ring axioms over all triples.
    pub fn check_axioms(&self) -> Result<(), AlgebraError> {
        let n = self.size;
        let fail = |axiom, a, b, c| Err(AlgebraError::RingAxiom { axiom, a, b, c });
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(Axiom::AdditiveAssociativity, a, b, c);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(Axiom::AdditiveCommutativity, a, b, 0);
                }
            }
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail(Axiom::AdditiveIdentity, a, self.zero, 0);
            }
        }
        for a in 0..n {
            if self.add(a, self.neg[a]) != self.zero {
                return fail(Axiom::AdditiveInverse, a, 0, 0);
            }
        }
        for a in 0..n {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return fail(Axiom::MultiplicativeIdentity, self.one, a, 0);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(Axiom::MultiplicativeAssociativity, a, b, c);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(b, c), a) != self.add(self.mul(b, a), self.mul(c, a))
                    {
                        return fail(Axiom::Distributivity, a, b, c);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(Axiom::MultiplicativeCommutativity, a, b, 0);
                }
            }
        }
        Ok(())
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
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// The descriptor this ring was built from, when it came from `build_ring`.
    pub fn spec(&self) -> Option<&RingSpec> {
        self.spec.as_ref()
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    /// Rows of the addition and multiplication tables, for serialization.
    pub fn tables(&self) -> RingTables {
        let rows = |t: &Vec<usize>| t.chunks(self.size).map(|r| r.to_vec()).collect();
        RingTables {
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_twelve_is_residue_arithmetic() {
        let r = build_ring(&RingSpec::Cyclic(12)).unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(r.add(7, 9), 4);
        assert_eq!(r.mul(4, 4), 4);
        assert_eq!(r.neg(5), 7);
        r.check_axioms().unwrap();
    }

    #[test]
    fn cyclic_rejects_small_modulus() {
        assert_eq!(build_ring(&RingSpec::Cyclic(1)), Err(AlgebraError::BadModulus(1)));
    }

    #[test]
    fn group_ring_z3_z2_has_v_squared_one() {
        let r = build_ring(&RingSpec::GroupRing {
            coefficients: Box::new(RingSpec::Cyclic(3)),
            group: vec![2],
        })
        .unwrap();
        assert_eq!(r.size(), 9);
        // a + b v is stored at index a + 3b
        let v = 3;
        assert_eq!(r.mul(v, v), r.one());
        // (1+v)^2 = 2+2v
        assert_eq!(r.mul(4, 4), 2 + 3 * 2);
        r.check_axioms().unwrap();
    }

    #[test]
    fn corrupted_cyclic_four_is_rejected() {
        let good = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let mut tables = good.tables();
        tables.mul[2][3] = 1;
        let err = build_ring(&RingSpec::Explicit(tables)).unwrap_err();
        match err {
            AlgebraError::RingAxiom { axiom, .. } => assert!(matches!(
                axiom,
                Axiom::MultiplicativeAssociativity | Axiom::Distributivity
            )),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn products_are_componentwise() {
        let r = build_ring(&RingSpec::Product(vec![RingSpec::Cyclic(2), RingSpec::Cyclic(3)]))
            .unwrap();
        assert_eq!(r.size(), 6);
        r.check_axioms().unwrap();
        // (1, 2) is 1 + 2*2 = 5; squared is (1, 1) = 3
        assert_eq!(r.mul(5, 5), 3);
    }

    #[test]
    fn oversized_carriers_are_refused() {
        let err = build_ring(&RingSpec::Product(vec![RingSpec::Cyclic(17), RingSpec::Cyclic(17)]));
        assert!(matches!(err, Err(AlgebraError::TooLarge { .. })));
    }
}
