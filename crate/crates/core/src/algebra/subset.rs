use std::collections::VecDeque;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use crate::error::AlgebraError;

use super::{FiniteModule, FiniteRing, Fingerprint};

/// A sorted set of element indices over a carrier of known size.
#[derive(Debug, Clone)]
pub struct ElementSet {
    elements: Vec<usize>,
    bits: Vec<u64>,
    universe: usize,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    /// Smaller sets first, then lexicographic on the sorted indices.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl ElementSet {
    pub fn new(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![0u64; universe.div_ceil(64)];
        for x in items {
            assert!(x < universe, "element {x} outside a carrier of size {universe}");
            bits[x / 64] |= 1 << (x % 64);
        }
        Self::from_bits(universe, bits)
    }

    fn from_bits(universe: usize, bits: Vec<u64>) -> Self {
        let elements = (0..universe)
            .filter(|&x| bits[x / 64] & (1 << (x % 64)) != 0)
            .collect();
        ElementSet {
            elements,
            bits,
            universe,
        }
    }

    pub fn empty(universe: usize) -> Self {
        Self::new(universe, [])
    }

    pub fn full(universe: usize) -> Self {
        Self::new(universe, 0..universe)
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.bits[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.universe
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Self::from_bits(self.universe, bits)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        Self::from_bits(self.universe, bits)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.universe, self.iter().filter(|&x| !other.contains(x)))
    }

    /// Smallest element lying in exactly one of the two sets.
    pub fn first_difference(&self, other: &ElementSet) -> Option<usize> {
        (0..self.universe).find(|&x| self.contains(x) != other.contains(x))
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubsetKind {
    Ideal,
    Submodule,
}

impl SubsetKind {
    pub fn name(self) -> &'static str {
        match self {
            SubsetKind::Ideal => "ideal",
            SubsetKind::Submodule => "submodule",
        }
    }
}

/// An ideal of a ring or a submodule of a module, tied to its carrier by fingerprint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicSubset {
    kind: SubsetKind,
    carrier: Fingerprint,
    set: ElementSet,
}

impl Deref for AlgebraicSubset {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.set
    }
}

impl AlgebraicSubset {
    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    pub fn carrier(&self) -> Fingerprint {
        self.carrier
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn into_set(self) -> ElementSet {
        self.set
    }

    /// Wraps a set already known to be closed on `carrier`.
    pub fn trusted<C: Carrier + ?Sized>(carrier: &C, set: ElementSet) -> Self {
        debug_assert_eq!(set.universe(), carrier.size());
        AlgebraicSubset {
            kind: carrier.subset_kind(),
            carrier: carrier.fingerprint(),
            set,
        }
    }

    /// Checks closure and wraps; errors name the first failing element.
    pub fn checked<C: Carrier + ?Sized>(carrier: &C, set: ElementSet) -> Result<Self, AlgebraError> {
        let closed = closure(carrier, &carrier.ring().elements().collect::<Vec<_>>(), set.iter());
        if closed != set {
            let bad = closed.first_difference(&set).unwrap_or(0);
            return Err(AlgebraError::Malformed(format!(
                "element set is not a {}: its closure adds {bad}",
                carrier.subset_kind().name()
            )));
        }
        Ok(Self::trusted(carrier, set))
    }

    pub fn belongs_to<C: Carrier + ?Sized>(&self, carrier: &C) -> bool {
        self.carrier == carrier.fingerprint() && self.kind == carrier.subset_kind()
    }
}

/// An additive group with an action of a ring: a ring acting on itself or a module.
pub trait Carrier {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn act(&self, r: usize, x: usize) -> usize;
    fn ring(&self) -> &FiniteRing;
    fn fingerprint(&self) -> Fingerprint;
    fn subset_kind(&self) -> SubsetKind;
}

impl Carrier for FiniteRing {
    fn size(&self) -> usize {
        FiniteRing::size(self)
    }
    fn zero(&self) -> usize {
        FiniteRing::zero(self)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        FiniteRing::add(self, a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        self.mul(r, x)
    }
    fn ring(&self) -> &FiniteRing {
        self
    }
    fn fingerprint(&self) -> Fingerprint {
        FiniteRing::fingerprint(self)
    }
    fn subset_kind(&self) -> SubsetKind {
        SubsetKind::Ideal
    }
}

impl Carrier for FiniteModule {
    fn size(&self) -> usize {
        FiniteModule::size(self)
    }
    fn zero(&self) -> usize {
        FiniteModule::zero(self)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        FiniteModule::add(self, a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        FiniteModule::act(self, r, x)
    }
    fn ring(&self) -> &FiniteRing {
        FiniteModule::ring(self)
    }
    fn fingerprint(&self) -> Fingerprint {
        FiniteModule::fingerprint(self)
    }
    fn subset_kind(&self) -> SubsetKind {
        SubsetKind::Submodule
    }
}

/// Smallest subset containing `gens` and zero, closed under addition and under
/// the action of every element of `scalars`. Worklist iteration to a fixpoint.
pub fn closure<C: Carrier + ?Sized>(
    c: &C,
    scalars: &[usize],
    gens: impl IntoIterator<Item = usize>,
) -> ElementSet {
    let n = c.size();
    let mut member = vec![false; n];
    let mut list = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let push = |x: usize, member: &mut Vec<bool>, list: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
        if !member[x] {
            member[x] = true;
            list.push(x);
            queue.push_back(x);
        }
    };
    push(c.zero(), &mut member, &mut list, &mut queue);
    for g in gens {
        push(g, &mut member, &mut list, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        for &r in scalars {
            push(c.act(r, x), &mut member, &mut list, &mut queue);
        }
        let seen = list.len();
        for i in 0..seen {
            let y = list[i];
            push(c.add(x, y), &mut member, &mut list, &mut queue);
        }
    }
    ElementSet::new(n, list)
}

pub fn additive_closure<C: Carrier + ?Sized>(c: &C, gens: impl IntoIterator<Item = usize>) -> ElementSet {
    closure(c, &[], gens)
}

/// Ideal or submodule generated by `gens`.
pub fn span<C: Carrier + ?Sized>(c: &C, gens: &[usize]) -> Result<AlgebraicSubset, AlgebraError> {
    if let Some(&bad) = gens.iter().find(|&&g| g >= c.size()) {
        return Err(AlgebraError::OutOfRange {
            index: bad,
            size: c.size(),
        });
    }
    let scalars: Vec<usize> = c.ring().elements().collect();
    Ok(AlgebraicSubset::trusted(c, closure(c, &scalars, gens.iter().copied())))
}

/// Additive span of `{r·x : r ∈ scalars, x ∈ b}`.
pub fn product_set<C: Carrier + ?Sized>(c: &C, scalars: &ElementSet, b: &ElementSet) -> ElementSet {
    let products: Vec<usize> = scalars
        .iter()
        .flat_map(|r| b.iter().map(move |x| (r, x)))
        .map(|(r, x)| c.act(r, x))
        .collect();
    additive_closure(c, products)
}

/// `a·b` for an ideal `a` of the base ring and an ideal or submodule `b` of `c`.
pub fn subset_product<C: Carrier + ?Sized>(
    c: &C,
    a: &AlgebraicSubset,
    b: &AlgebraicSubset,
) -> Result<AlgebraicSubset, AlgebraError> {
    if a.kind() != SubsetKind::Ideal {
        return Err(AlgebraError::KindMismatch {
            expected: "ideal",
            found: a.kind().name(),
        });
    }
    if a.carrier() != c.ring().fingerprint() || !b.belongs_to(c) {
        return Err(AlgebraError::CarrierMismatch);
    }
    Ok(AlgebraicSubset::trusted(c, product_set(c, a.set(), b.set())))
}

/// `{r ∈ scalars : r·m ∈ target for every m ∈ domain}`, as a set of ring elements.
pub fn colon_scalars<C: Carrier + ?Sized>(
    c: &C,
    scalars: impl IntoIterator<Item = usize>,
    domain: &ElementSet,
    target: &ElementSet,
) -> ElementSet {
    ElementSet::new(
        c.ring().size(),
        scalars
            .into_iter()
            .filter(|&r| domain.iter().all(|m| target.contains(c.act(r, m)))),
    )
}

/// `{m ∈ domain : r·m ∈ target}`.
pub fn colon_within<C: Carrier + ?Sized>(c: &C, domain: &ElementSet, target: &ElementSet, r: usize) -> ElementSet {
    ElementSet::new(c.size(), domain.iter().filter(|&m| target.contains(c.act(r, m))))
}

/// The ideal `(N :_R M) = {r : rM ⊆ N}`.
pub fn colon_into_ring<C: Carrier + ?Sized>(c: &C, n: &AlgebraicSubset) -> Result<AlgebraicSubset, AlgebraError> {
    if !n.belongs_to(c) {
        return Err(AlgebraError::CarrierMismatch);
    }
    let ring = c.ring();
    let set = colon_scalars(c, ring.elements(), &ElementSet::full(c.size()), n.set());
    Ok(AlgebraicSubset::trusted(ring, set))
}

/// The submodule `(N :_M r) = {m : rm ∈ N}`.
pub fn colon_into_module<C: Carrier + ?Sized>(
    c: &C,
    n: &AlgebraicSubset,
    r: usize,
) -> Result<AlgebraicSubset, AlgebraError> {
    if !n.belongs_to(c) {
        return Err(AlgebraError::CarrierMismatch);
    }
    if r >= c.ring().size() {
        return Err(AlgebraError::OutOfRange {
            index: r,
            size: c.ring().size(),
        });
    }
    Ok(AlgebraicSubset::trusted(
        c,
        colon_within(c, &ElementSet::full(c.size()), n.set(), r),
    ))
}
