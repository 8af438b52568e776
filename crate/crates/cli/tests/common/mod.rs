//! Naive reference implementations built from raw tables and component
//! membership only. Nothing here calls the engine's predicates, lattices or
//! closures.

#![allow(dead_code)]

use gradedie::grading::GradedModule;

pub struct Model {
    pub r_add: Vec<Vec<usize>>,
    pub r_mul: Vec<Vec<usize>>,
    pub m_add: Vec<Vec<usize>>,
    pub act: Vec<Vec<usize>>,
    pub r_zero: usize,
    pub m_zero: usize,
    /// `r_comp[g][x]`: `x ∈ R_g`.
    pub r_comp: Vec<Vec<bool>>,
    pub m_comp: Vec<Vec<bool>>,
    pub e: usize,
    /// Homogeneous components of each module element, indexed by degree.
    pub m_parts: Vec<Vec<usize>>,
}

fn decompose(add: &[Vec<usize>], zero: usize, comps: &[Vec<bool>], x: usize) -> Vec<usize> {
    fn go(add: &[Vec<usize>], comps: &[Vec<bool>], g: usize, acc: usize, target: usize, out: &mut Vec<usize>) -> bool {
        if g == comps.len() {
            return acc == target;
        }
        for y in 0..comps[g].len() {
            if comps[g][y] {
                out.push(y);
                if go(add, comps, g + 1, add[acc][y], target, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut out = Vec::new();
    assert!(go(add, comps, 0, zero, x, &mut out), "element {x} has no decomposition");
    out
}

impl Model {
    pub fn new(module: &GradedModule) -> Self {
        let rt = module.ring().tables();
        let mt = module.module().tables();
        let r_comp = module
            .graded_ring()
            .grading()
            .components()
            .iter()
            .map(|c| (0..rt.add.len()).map(|x| c.contains(x)).collect())
            .collect();
        let m_comp: Vec<Vec<bool>> = module
            .grading()
            .components()
            .iter()
            .map(|c| (0..mt.add.len()).map(|x| c.contains(x)).collect())
            .collect();
        let m_parts = (0..mt.add.len())
            .map(|x| decompose(&mt.add, mt.zero, &m_comp, x))
            .collect();
        Model {
            r_add: rt.add,
            r_mul: rt.mul,
            m_add: mt.add,
            act: mt.action,
            r_zero: rt.zero,
            m_zero: mt.zero,
            r_comp,
            m_comp,
            e: module.group().identity(),
            m_parts,
        }
    }

    pub fn ring_size(&self) -> usize {
        self.r_add.len()
    }

    pub fn size(&self) -> usize {
        self.m_add.len()
    }

    pub fn degrees(&self) -> usize {
        self.m_comp.len()
    }

    fn r_hom(&self) -> Vec<usize> {
        (0..self.ring_size()).filter(|&x| self.r_comp.iter().any(|c| c[x])).collect()
    }

    fn m_hom(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.m_comp.iter().any(|c| c[x])).collect()
    }

    fn base(&self) -> Vec<usize> {
        (0..self.ring_size()).filter(|&x| self.r_comp[self.e][x]).collect()
    }

    fn component(&self, g: usize) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.m_comp[g][x]).collect()
    }

    /// Additive span of `items` under `add`, starting from `zero`.
    fn add_span(add: &[Vec<usize>], zero: usize, items: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut in_set = vec![false; add.len()];
        in_set[zero] = true;
        let mut members = vec![zero];
        let mut queue: Vec<usize> = items.into_iter().collect();
        while let Some(x) = queue.pop() {
            if in_set[x] {
                continue;
            }
            in_set[x] = true;
            queue.extend(members.iter().map(|&y| add[x][y]));
            queue.push(add[x][x]);
            members.push(x);
        }
        in_set
    }

    /// Additive span of `{a·x}` over `a ∈ scalars`, `x ∈ xs`.
    fn products(&self, scalars: &[usize], xs: &[usize]) -> Vec<bool> {
        let items: Vec<usize> = scalars.iter().flat_map(|&a| xs.iter().map(move |&x| self.act[a][x])).collect();
        Self::add_span(&self.m_add, self.m_zero, items)
    }

    fn ring_products(&self, a: &[usize], b: &[usize]) -> Vec<bool> {
        let items: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| self.r_mul[x][y])).collect();
        Self::add_span(&self.r_add, self.r_zero, items)
    }

    fn colon(&self, scalars: &[usize], domain: &[usize], target: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.ring_size()];
        for &r in scalars {
            out[r] = domain.iter().all(|&x| target[self.act[r][x]]);
        }
        out
    }

    /// `(value, vacuous)` of the shared pair condition.
    fn pairs(&self, n: &[bool], excluded: &[bool], scalars: &[usize], vectors: &[usize], colon: &[bool]) -> (bool, bool) {
        let vacuous = (0..n.len()).all(|x| !n[x] || excluded[x]);
        for &r in scalars {
            for &m in vectors {
                let rm = self.act[r][m];
                if n[rm] && !excluded[rm] && !n[m] && !colon[r] {
                    return (false, false);
                }
            }
        }
        (true, vacuous)
    }

    fn ie(&self, i: &[bool], x: &[bool]) -> Vec<bool> {
        let ie: Vec<usize> = self.base().into_iter().filter(|&a| i[a]).collect();
        let xs: Vec<usize> = (0..x.len()).filter(|&m| x[m]).collect();
        self.products(&ie, &xs)
    }

    pub fn graded_prime(&self, n: &[bool]) -> (bool, bool) {
        let all: Vec<usize> = (0..self.ring_size()).collect();
        let colon = self.colon(&all, &(0..self.size()).collect::<Vec<_>>(), n);
        self.pairs(n, &vec![false; self.size()], &self.r_hom(), &self.m_hom(), &colon)
    }

    pub fn graded_weakly_prime(&self, n: &[bool]) -> (bool, bool) {
        let all: Vec<usize> = (0..self.ring_size()).collect();
        let colon = self.colon(&all, &(0..self.size()).collect::<Vec<_>>(), n);
        let mut zero = vec![false; self.size()];
        zero[self.m_zero] = true;
        self.pairs(n, &zero, &self.r_hom(), &self.m_hom(), &colon)
    }

    pub fn graded_ie_prime(&self, n: &[bool], i: &[bool]) -> (bool, bool) {
        let all: Vec<usize> = (0..self.ring_size()).collect();
        let colon = self.colon(&all, &(0..self.size()).collect::<Vec<_>>(), n);
        self.pairs(n, &self.ie(i, n), &self.r_hom(), &self.m_hom(), &colon)
    }

    fn g_data(&self, n: &[bool], g: usize) -> Option<(Vec<bool>, Vec<usize>, Vec<bool>)> {
        let m_g = self.component(g);
        let n_g: Vec<bool> = (0..self.size()).map(|x| n[x] && self.m_comp[g][x]).collect();
        if m_g.iter().all(|&x| n_g[x]) {
            return None;
        }
        let colon = self.colon(&self.base(), &m_g, &n_g);
        Some((n_g, m_g, colon))
    }

    /// `None` when `N_g = M_g`.
    pub fn g_prime(&self, n: &[bool], g: usize) -> Option<(bool, bool)> {
        let (n_g, m_g, colon) = self.g_data(n, g)?;
        Some(self.pairs(&n_g, &vec![false; self.size()], &self.base(), &m_g, &colon))
    }

    pub fn g_ie_prime(&self, n: &[bool], i: &[bool], g: usize) -> Option<(bool, bool)> {
        let (n_g, m_g, colon) = self.g_data(n, g)?;
        let excluded = self.ie(i, &n_g);
        Some(self.pairs(&n_g, &excluded, &self.base(), &m_g, &colon))
    }

    /// Ideal-level condition inside `R_e`; `None` when `J_e = R_e`.
    pub fn e_ie_prime_ideal(&self, j: &[bool], i: &[bool]) -> Option<(bool, bool)> {
        let base = self.base();
        let j_e: Vec<usize> = base.iter().copied().filter(|&x| j[x]).collect();
        if j_e.len() == base.len() {
            return None;
        }
        let i_e: Vec<usize> = base.iter().copied().filter(|&x| i[x]).collect();
        let ij = self.ring_products(&i_e, &j_e);
        let in_j = |x: usize| j_e.contains(&x);
        let vacuous = j_e.iter().all(|&x| ij[x]);
        for &r in &base {
            for &s in &base {
                let rs = self.r_mul[r][s];
                if in_j(rs) && !ij[rs] && !in_j(r) && !in_j(s) {
                    return Some((false, false));
                }
            }
        }
        Some((true, vacuous))
    }

    fn closed(&self, set: &[bool], scalars: &[usize]) -> bool {
        let n = set.len();
        (0..n).all(|a| {
            !set[a] || ((0..n).all(|b| !set[b] || set[self.m_add[a][b]]) && scalars.iter().all(|&r| set[self.act[r][a]]))
        })
    }

    fn graded(&self, set: &[bool]) -> bool {
        (0..set.len()).all(|x| !set[x] || self.m_parts[x].iter().all(|&p| set[p]))
    }

    fn subsets_of(&self, pool: &[usize]) -> impl Iterator<Item = Vec<bool>> + '_ {
        let pool = pool.to_vec();
        assert!(pool.len() <= 20);
        (0u32..(1 << pool.len())).map(move |mask| {
            let mut set = vec![false; self.size()];
            for (k, &x) in pool.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    set[x] = true;
                }
            }
            set
        })
    }

    /// Every graded submodule, by brute force over all subsets.
    pub fn graded_submodules(&self) -> Vec<Vec<usize>> {
        let all_r: Vec<usize> = (0..self.ring_size()).collect();
        let pool: Vec<usize> = (0..self.size()).collect();
        let mut out: Vec<Vec<usize>> = self
            .subsets_of(&pool)
            .filter(|s| s[self.m_zero] && self.closed(s, &all_r) && self.graded(s))
            .map(|s| (0..s.len()).filter(|&x| s[x]).collect())
            .collect();
        out.sort();
        out
    }

    /// `Some(g)` checks the `R_e`-submodules of `M_g`; `None` the graded submodules of `M`.
    pub fn is_multiplication(&self, scope: Option<usize>) -> bool {
        let (scalars, whole): (Vec<usize>, Vec<usize>) = match scope {
            None => ((0..self.ring_size()).collect(), (0..self.size()).collect()),
            Some(g) => (self.base(), self.component(g)),
        };
        self.subsets_of(&whole)
            .filter(|s| s[self.m_zero] && self.closed(s, &scalars) && (scope.is_some() || self.graded(s)))
            .all(|k| {
                let colon = self.colon(&scalars, &whole, &k);
                let c: Vec<usize> = scalars.iter().copied().filter(|&r| colon[r]).collect();
                self.products(&c, &whole) == k
            })
    }
}
