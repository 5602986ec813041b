//! Z/2-gradings `R = R0 ⊕ R1`: validation, the standard example families,
//! homogeneous decomposition, `R1²`, `R1³`, R0-submodules of `R1` and the
//! 2x2 matrix representation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::ideal::{close_ideal, enumerate_closures};
use crate::ring::{fresh_id, Construction, Elem, FiniteRing, Ideal, RingElement};
use crate::set::ElemSet;

struct GradedData {
    id: u64,
    ring: FiniteRing,
    r0: ElemSet,
    r1: ElemSet,
    part0: Vec<Elem>,
    part1: Vec<Elem>,
    r0_ring: FiniteRing,
    embed0: Vec<Elem>,
    restrict0: Vec<Option<Elem>>,
    provenance: String,
}

/// A finite ring with a validated Z/2-grading.
///
/// The degree-0 part is also materialized as a ring of its own
/// ([`GradedRing::r0_ring`]); ideals of `R0` live there, with codes following
/// the ascending order of their codes in `R`.
#[derive(Clone)]
pub struct GradedRing {
    data: Arc<GradedData>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({})", self.data.provenance)
    }
}

/// An R0-submodule of `R1`, stored by its member codes in `R`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    graded: u64,
    members: ElemSet,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.members)
    }
}

impl Submodule {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

/// `[[x0, x1], [x1, x0]]` with entries in the ambient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixRep(pub [[Elem; 2]; 2]);

impl GradedRing {
    /// Validates a proposed grading exhaustively.
    pub fn manual(ring: &FiniteRing, r0: &ElemSet, r1: &ElemSet) -> Result<GradedRing> {
        let provenance = format!("{} with a manual grading", ring.describe());
        Self::build(ring, r0.clone(), r1.clone(), provenance)
    }

    /// `R0 = R`, `R1 = 0`.
    pub fn trivial(ring: &FiniteRing) -> Result<GradedRing> {
        let r1 = ElemSet::from_elems(ring.order(), [ring.zero()]);
        Self::build(ring, ring.all(), r1, format!("{} trivially graded", ring.describe()))
    }

    /// `A[X]/(X² - alpha)` with `R0 = A` and `R1 = A·x`.
    pub fn quadratic_extension(a: &FiniteRing, alpha: RingElement) -> Result<GradedRing> {
        Self::quadratic_with_var(a, alpha, 'x')
    }

    pub fn quadratic_with_var(a: &FiniteRing, alpha: RingElement, var: char) -> Result<GradedRing> {
        let alpha = a.check(alpha)?;
        let ring = FiniteRing::poly_quotient_with_var(a, &[a.neg(alpha), a.zero(), a.one()], var)?;
        let n = a.order();
        let r0 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| e.index() < n));
        let r1 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| e.index() % n == 0));
        let provenance = format!("{} = {}[{var}]/({var}^2-{})", ring.describe(), a.describe(), a.render(alpha));
        Self::build(&ring, r0, r1, provenance)
    }

    /// `Z/n[i]` with `i² = -1`, graded by the real and imaginary parts.
    pub fn gaussian(n: u32) -> Result<GradedRing> {
        let z = FiniteRing::zmod(n)?;
        let minus_one = z.tag(z.neg(z.one()));
        Self::quadratic_with_var(&z, minus_one, 'i')
    }

    /// Idealization `Z/n ⋉ M` with `M = ⊕ Z/m_i`, graded by `R0 = Z/n`,
    /// `R1 = M`.
    pub fn trivial_extension(a: &FiniteRing, module_orders: &[u32]) -> Result<GradedRing> {
        let Construction::Zmod(n) = *a.construction() else {
            return Err(Error::InvalidParameter("trivial extensions are built over Z/n only".into()));
        };
        let ring = FiniteRing::idealization(n, module_orders)?;
        let n = n as usize;
        let r0 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| e.index() < n));
        let r1 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| e.index() % n == 0));
        let provenance = ring.describe();
        Self::build(&ring, r0, r1, provenance)
    }

    /// `A[X]/(X^k)` graded by parity of degree.
    pub fn truncated_poly(a: &FiniteRing, k: usize) -> Result<GradedRing> {
        if k == 0 {
            return Err(Error::InvalidParameter("truncation degree must be at least 1".into()));
        }
        let mut modulus = vec![a.zero(); k];
        modulus.push(a.one());
        let ring = FiniteRing::poly_quotient(a, &modulus)?;
        let n = a.order();
        let parity_zero = |e: &Elem, parity: usize| {
            crate::ring::digits(e.index(), n, k).iter().enumerate().all(|(deg, c)| deg % 2 != parity || *c == a.zero())
        };
        let r0 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| parity_zero(e, 1)));
        let r1 = ElemSet::from_elems(ring.order(), ring.elements().filter(|e| parity_zero(e, 0)));
        let provenance = format!("{} graded by parity of degree", ring.describe());
        Self::build(&ring, r0, r1, provenance)
    }

    fn build(ring: &FiniteRing, r0: ElemSet, r1: ElemSet, provenance: String) -> Result<GradedRing> {
        let n = ring.order();
        if r0.universe() != n || r1.universe() != n {
            return Err(Error::RingMismatch);
        }
        let decomposition = |witness: Elem, reason: &str| Error::GradingDecomposition {
            witness: ring.render(witness),
            reason: reason.to_string(),
        };
        for (part, label) in [(&r0, "degree-0"), (&r1, "degree-1")] {
            if !part.contains(ring.zero()) {
                return Err(decomposition(ring.zero(), &format!("{label} part does not contain 0")));
            }
            for a in part.iter() {
                for b in part.iter() {
                    let s = ring.add(a, b);
                    if !part.contains(s) {
                        return Err(decomposition(s, &format!("{label} part is not closed under addition")));
                    }
                }
            }
        }
        if let Some(x) = r0.intersection(&r1).iter().find(|&x| x != ring.zero()) {
            return Err(decomposition(x, "element lies in both parts"));
        }
        let mut part0 = vec![None; n];
        let mut part1 = vec![ring.zero(); n];
        for a in r0.iter() {
            for b in r1.iter() {
                let s = ring.add(a, b);
                part0[s.index()] = Some(a);
                part1[s.index()] = b;
            }
        }
        if let Some(x) = ring.elements().find(|x| part0[x.index()].is_none()) {
            return Err(decomposition(x, "element is not a sum of homogeneous elements"));
        }
        let part0: Vec<Elem> = part0.into_iter().map(|p| p.expect("covered")).collect();
        if !r0.contains(ring.one()) {
            return Err(decomposition(ring.one(), "the identity has a nonzero degree-1 component"));
        }
        for (p, q, target) in [(&r0, &r0, &r0), (&r0, &r1, &r1), (&r1, &r1, &r0)] {
            for a in p.iter() {
                for b in q.iter() {
                    let c = ring.mul(a, b);
                    if !target.contains(c) {
                        return Err(Error::GradingAxiom {
                            left: ring.render(a),
                            right: ring.render(b),
                            product: ring.render(c),
                        });
                    }
                }
            }
        }
        let (r0_ring, embed0) = ring.subring(&r0)?;
        let mut restrict0 = vec![None; n];
        for (k, e) in embed0.iter().enumerate() {
            restrict0[e.index()] = Some(Elem(k as u16));
        }
        let data = GradedData {
            id: fresh_id(),
            ring: ring.clone(),
            r0,
            r1,
            part0,
            part1,
            r0_ring,
            embed0,
            restrict0,
            provenance,
        };
        Ok(GradedRing { data: Arc::new(data) })
    }

    /// Same grading with a different enumeration bound.
    pub fn with_bound(&self, bound: usize) -> GradedRing {
        let d = &self.data;
        let data = GradedData {
            id: d.id,
            ring: d.ring.with_bound(bound),
            r0: d.r0.clone(),
            r1: d.r1.clone(),
            part0: d.part0.clone(),
            part1: d.part1.clone(),
            r0_ring: d.r0_ring.with_bound(bound),
            embed0: d.embed0.clone(),
            restrict0: d.restrict0.clone(),
            provenance: d.provenance.clone(),
        };
        GradedRing { data: Arc::new(data) }
    }

    pub fn id(&self) -> u64 {
        self.data.id
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.data.ring
    }

    pub fn provenance(&self) -> &str {
        &self.data.provenance
    }

    pub fn r0(&self) -> &ElemSet {
        &self.data.r0
    }

    pub fn r1(&self) -> &ElemSet {
        &self.data.r1
    }

    /// `R0` as a ring in its own right.
    pub fn r0_ring(&self) -> &FiniteRing {
        &self.data.r0_ring
    }

    /// Image in `R` of an element of [`Self::r0_ring`].
    pub fn embed(&self, a: Elem) -> Elem {
        self.data.embed0[a.index()]
    }

    /// Code in [`Self::r0_ring`] of a degree-0 element of `R`.
    pub fn restrict(&self, x: Elem) -> Option<Elem> {
        self.data.restrict0[x.index()]
    }

    pub fn embed_set(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_elems(self.ring().order(), set.iter().map(|a| self.embed(a)))
    }

    pub fn r1_is_zero(&self) -> bool {
        self.r1().len() == 1
    }

    /// `R0 ∪ R1`, ascending.
    pub fn homogeneous(&self) -> Vec<Elem> {
        self.r0().union(self.r1()).iter().collect()
    }

    /// Components `(x0, x1)` of an element of `R`.
    pub fn parts(&self, x: Elem) -> (Elem, Elem) {
        (self.data.part0[x.index()], self.data.part1[x.index()])
    }

    pub fn homogeneous_parts(&self, x: RingElement) -> Result<(RingElement, RingElement)> {
        let x = self.ring().check(x)?;
        let (x0, x1) = self.parts(x);
        Ok((self.ring().tag(x0), self.ring().tag(x1)))
    }

    pub fn render(&self, x: Elem) -> String {
        self.ring().render(x)
    }

    /// `R1²`: the ideal of `R0` additively generated by products of two
    /// degree-1 elements.
    pub fn r1_squared(&self) -> Ideal {
        let r = self.ring();
        let products = self.r1().iter().flat_map(|a| self.r1().iter().map(move |b| r.mul(a, b)));
        let seed: Vec<Elem> = products.map(|p| self.restrict(p).expect("R1 R1 lies in R0")).collect();
        Ideal::trusted(self.r0_ring(), close_ideal(self.r0_ring(), seed))
    }

    /// `R1³ = R1² · R1`.
    pub fn r1_cubed(&self) -> Submodule {
        let sq = self.r1_squared();
        let r = self.ring();
        let gens: Vec<Elem> = sq
            .members()
            .iter()
            .flat_map(|c| self.r1().iter().map(move |x| (c, x)))
            .map(|(c, x)| r.mul(self.embed(c), x))
            .collect();
        self.span(&gens)
    }

    pub fn is_strongly_graded(&self) -> bool {
        self.r1_squared().members().is_full()
    }

    /// `x ↦ [[x0, x1], [x1, x0]]`.
    pub fn matrix_rep(&self, x: RingElement) -> Result<MatrixRep> {
        let x = self.ring().check(x)?;
        Ok(self.matrix_of(x))
    }

    pub(crate) fn matrix_of(&self, x: Elem) -> MatrixRep {
        let (x0, x1) = self.parts(x);
        MatrixRep([[x0, x1], [x1, x0]])
    }

    pub fn matrix_add(&self, a: &MatrixRep, b: &MatrixRep) -> MatrixRep {
        let r = self.ring();
        let mut out = [[r.zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = r.add(a.0[i][j], b.0[i][j]);
            }
        }
        MatrixRep(out)
    }

    pub fn matrix_mul(&self, a: &MatrixRep, b: &MatrixRep) -> MatrixRep {
        let r = self.ring();
        let mut out = [[r.zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = r.add(r.mul(a.0[i][0], b.0[0][j]), r.mul(a.0[i][1], b.0[1][j]));
            }
        }
        MatrixRep(out)
    }

    pub(crate) fn ensure_ours(&self, m: &Submodule) -> Result<()> {
        if m.graded != self.id() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn ensure_r0_ideal(&self, i: &Ideal) -> Result<()> {
        if !i.ring().same_ring(self.r0_ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Validates a subset of `R1` as an R0-submodule.
    pub fn submodule(&self, members: ElemSet) -> Result<Submodule> {
        let r = self.ring();
        if members.universe() != r.order() {
            return Err(Error::RingMismatch);
        }
        if !members.is_subset(self.r1()) {
            return Err(Error::InvalidInput("submodule must lie in R1".into()));
        }
        if !members.contains(r.zero()) {
            return Err(Error::InvalidInput("submodule must contain 0".into()));
        }
        for m in members.iter() {
            for n in members.iter() {
                if !members.contains(r.add(m, n)) {
                    return Err(Error::InvalidInput(format!("{} + {} leaves the set", r.render(m), r.render(n))));
                }
            }
            for a in self.r0().iter() {
                if !members.contains(r.mul(a, m)) {
                    return Err(Error::InvalidInput(format!("({}) * ({}) leaves the set", r.render(a), r.render(m))));
                }
            }
        }
        Ok(Submodule { graded: self.id(), members })
    }

    pub(crate) fn trusted_submodule(&self, members: ElemSet) -> Submodule {
        Submodule { graded: self.id(), members }
    }

    /// R0-span of degree-1 elements.
    pub fn span(&self, gens: &[Elem]) -> Submodule {
        let r = self.ring();
        let mut members = ElemSet::from_elems(r.order(), [r.zero()]);
        for &g in gens {
            debug_assert!(self.r1().contains(g));
            members = self.extend_submodule(&members, g);
        }
        self.trusted_submodule(members)
    }

    /// `N + R0·x`.
    fn extend_submodule(&self, n: &ElemSet, x: Elem) -> ElemSet {
        let r = self.ring();
        let cyclic = ElemSet::from_elems(r.order(), self.r0().iter().map(|a| r.mul(a, x)));
        let mut out = ElemSet::empty(r.order());
        for m in n.iter() {
            for c in cyclic.iter() {
                out.insert(r.add(m, c));
            }
        }
        out
    }

    pub fn zero_submodule(&self) -> Submodule {
        self.trusted_submodule(ElemSet::from_elems(self.ring().order(), [self.ring().zero()]))
    }

    pub fn whole_r1(&self) -> Submodule {
        self.trusted_submodule(self.r1().clone())
    }

    /// Every R0-submodule of `R1`, canonically ordered.
    pub fn submodules(&self) -> Result<Vec<Submodule>> {
        self.ring().ensure_enumerable("graded ring")?;
        let r = self.ring();
        let candidates: Vec<Elem> = self.r1().iter().collect();
        let sets = enumerate_closures(
            r.order(),
            r.zero(),
            &candidates,
            |n, x| self.extend_submodule(n, x),
            |a, b| r.add(a, b),
        );
        Ok(sets.into_iter().map(|s| self.trusted_submodule(s)).collect())
    }

    /// `(R' : R1) = {a ∈ R0 : a·R1 ⊆ R'}`, an ideal of `R0`.
    pub fn residual(&self, rp: &Submodule) -> Result<Ideal> {
        self.ensure_ours(rp)?;
        let r = self.ring();
        let r0 = self.r0_ring();
        let members = ElemSet::from_elems(
            r0.order(),
            r0.elements().filter(|&a| self.r1().iter().all(|x| rp.contains(r.mul(self.embed(a), x)))),
        );
        Ideal::from_members(r0, members)
    }

    /// `I·R1` for an ideal `I` of `R0`.
    pub fn ideal_times_r1(&self, i: &Ideal) -> Result<Submodule> {
        self.ensure_r0_ideal(i)?;
        let r = self.ring();
        let gens: Vec<Elem> = i
            .members()
            .iter()
            .flat_map(|a| self.r1().iter().map(move |x| (a, x)))
            .map(|(a, x)| r.mul(self.embed(a), x))
            .collect();
        Ok(self.span(&gens))
    }

    /// `R1·R'` as an ideal of `R0`.
    pub fn r1_times_submodule(&self, rp: &Submodule) -> Result<Ideal> {
        self.ensure_ours(rp)?;
        let r = self.ring();
        let seed: Vec<Elem> = self
            .r1()
            .iter()
            .flat_map(|x| rp.members().iter().map(move |m| r.mul(x, m)))
            .map(|p| self.restrict(p).expect("R1 R1 lies in R0"))
            .collect();
        Ok(Ideal::trusted(self.r0_ring(), close_ideal(self.r0_ring(), seed)))
    }

    /// Shortest list of pairs `(a_i, b_i)` in `R1` with `Σ a_i b_i = 1`, found
    /// by breadth-first search over partial sums. `None` unless strongly graded.
    pub fn unit_decomposition(&self) -> Option<Vec<(Elem, Elem)>> {
        let r = self.ring();
        let mut steps: Vec<(Elem, (Elem, Elem))> = Vec::new();
        for a in self.r1().iter() {
            for b in self.r1().iter() {
                let p = r.mul(a, b);
                if p != r.zero() && !steps.iter().any(|(q, _)| *q == p) {
                    steps.push((p, (a, b)));
                }
            }
        }
        let mut prev: Vec<Option<(Elem, (Elem, Elem))>> = vec![None; r.order()];
        let mut seen = ElemSet::from_elems(r.order(), [r.zero()]);
        let mut queue = std::collections::VecDeque::from([r.zero()]);
        while let Some(s) = queue.pop_front() {
            if s == r.one() {
                let mut path = Vec::new();
                let mut cur = s;
                while let Some((from, pair)) = prev[cur.index()] {
                    path.push(pair);
                    cur = from;
                }
                path.reverse();
                return Some(path);
            }
            for &(p, pair) in &steps {
                let t = r.add(s, p);
                if seen.insert(t) {
                    prev[t.index()] = Some((s, pair));
                    queue.push_back(t);
                }
            }
        }
        None
    }
}
