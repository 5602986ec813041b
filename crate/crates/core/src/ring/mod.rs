//! Finite commutative rings with unit, stored as full operation tables.
//!
//! Every element is a code `0..order`. Constructions fix a bijection between
//! codes and their natural representation (residues, coefficient vectors,
//! pairs), so two equal elements always carry the same code.

pub(crate) mod ideal;
mod iso;

pub use ideal::{enumerate_ideals, max_spec, spec, Ideal, IdealClass};
pub use iso::find_isomorphism;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Largest ring that may be constructed. Tables are `order²` entries each.
pub const MAX_ORDER: usize = 2048;

/// Default upper bound on ring size for ideal and submodule enumeration.
pub const DEFAULT_BOUND: usize = 256;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Canonical element code within one ring. Carries no ring identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub u16);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An element tagged with the identity of the ring it came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingElement {
    ring: u64,
    elem: Elem,
}

impl RingElement {
    pub fn elem(self) -> Elem {
        self.elem
    }

    pub fn ring_id(self) -> u64 {
        self.ring
    }
}

/// How a ring was built; drives rendering and reporting.
#[derive(Clone, Debug)]
pub enum Construction {
    Zmod(u32),
    Product(FiniteRing, FiniteRing),
    PolyQuotient { base: FiniteRing, modulus: Vec<Elem>, var: char },
    TrivialExtension { n: u32, orders: Vec<u32> },
    Subring { parent: FiniteRing, embed: Vec<Elem> },
}

struct RingData {
    id: u64,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    construction: Construction,
}

/// A finite commutative ring with unit. Cloning is cheap; clones share tables
/// and identity.
#[derive(Clone)]
pub struct FiniteRing {
    data: Arc<RingData>,
    bound: usize,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.describe(), self.order())
    }
}

impl FiniteRing {
    fn from_tables(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
        construction: Construction,
    ) -> Result<Self> {
        if zero == one {
            return Err(Error::InvalidParameter("ring must be nonzero (0 = 1)".into()));
        }
        let mut neg = vec![0u16; order];
        for a in 0..order {
            neg[a] = (0..order)
                .find(|&b| add[a * order + b] == zero.0)
                .ok_or_else(|| Error::InvalidParameter(format!("element {a} has no additive inverse")))?
                as u16;
        }
        let data = RingData { id: fresh_id(), order, add, mul, neg, zero, one, construction };
        Ok(FiniteRing { data: Arc::new(data), bound: DEFAULT_BOUND })
    }

    fn check_order(order: usize) -> Result<()> {
        if order > MAX_ORDER {
            return Err(Error::ResourceLimit { what: "ring construction".into(), size: order, bound: MAX_ORDER });
        }
        Ok(())
    }

    /// The ring Z/nZ with codes `0..n`.
    pub fn zmod(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {n}")));
        }
        let order = n as usize;
        Self::check_order(order)?;
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add[a * order + b] = ((a + b) % order) as u16;
                mul[a * order + b] = ((a * b) % order) as u16;
            }
        }
        Self::from_tables(order, add, mul, Elem(0), Elem(1), Construction::Zmod(n))
    }

    /// Componentwise product ring; the code of `(x, y)` is `x * |b| + y`.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        let order = na * nb;
        Self::check_order(order)?;
        let split = |c: usize| (Elem((c / nb) as u16), Elem((c % nb) as u16));
        let join = |x: Elem, y: Elem| (x.index() * nb + y.index()) as u16;
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for p in 0..order {
            let (px, py) = split(p);
            for q in 0..order {
                let (qx, qy) = split(q);
                add[p * order + q] = join(a.add(px, qx), b.add(py, qy));
                mul[p * order + q] = join(a.mul(px, qx), b.mul(py, qy));
            }
        }
        let zero = Elem(join(a.zero(), b.zero()));
        let one = Elem(join(a.one(), b.one()));
        Self::from_tables(order, add, mul, zero, one, Construction::Product(a.clone(), b.clone()))
    }

    /// `base[X]/(modulus)` for a monic modulus given by its coefficients,
    /// lowest degree first. Elements are coefficient vectors of length `d`
    /// encoded little-endian in base `|base|`, so constants keep their codes.
    pub fn poly_quotient(base: &FiniteRing, modulus: &[Elem]) -> Result<Self> {
        Self::poly_quotient_with_var(base, modulus, 'x')
    }

    pub fn poly_quotient_with_var(base: &FiniteRing, modulus: &[Elem], var: char) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidParameter("modulus must have degree at least 1".into()));
        }
        if let Some(bad) = modulus.iter().find(|c| c.index() >= base.order()) {
            return Err(Error::InvalidParameter(format!(
                "modulus coefficient {} is not an element of the base",
                bad.0
            )));
        }
        let d = modulus.len() - 1;
        if modulus[d] != base.one() {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        let nb = base.order();
        let order = nb.checked_pow(d as u32).filter(|&o| o <= MAX_ORDER).ok_or_else(|| Error::ResourceLimit {
            what: "ring construction".into(),
            size: nb.saturating_pow(d as u32),
            bound: MAX_ORDER,
        })?;

        let coeffs: Vec<Vec<Elem>> = (0..order).map(|c| digits(c, nb, d)).collect();
        let encode = |v: &[Elem]| v.iter().rev().fold(0usize, |acc, c| acc * nb + c.index()) as u16;

        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut prod = vec![base.zero(); 2 * d - 1];
        for p in 0..order {
            for q in 0..order {
                let (u, v) = (&coeffs[p], &coeffs[q]);
                let sum: Vec<Elem> = u.iter().zip(v).map(|(&x, &y)| base.add(x, y)).collect();
                add[p * order + q] = encode(&sum);

                prod.iter_mut().for_each(|c| *c = base.zero());
                for i in 0..d {
                    if u[i] == base.zero() {
                        continue;
                    }
                    for j in 0..d {
                        prod[i + j] = base.add(prod[i + j], base.mul(u[i], v[j]));
                    }
                }
                // X^d = -(m_0 + .. + m_{d-1} X^{d-1})
                for k in (d..2 * d - 1).rev() {
                    let c = prod[k];
                    if c == base.zero() {
                        continue;
                    }
                    prod[k] = base.zero();
                    for (j, &m) in modulus[..d].iter().enumerate() {
                        prod[k - d + j] = base.sub(prod[k - d + j], base.mul(c, m));
                    }
                }
                mul[p * order + q] = encode(&prod[..d]);
            }
        }
        let zero = Elem(base.zero().0);
        let one = Elem(base.one().0);
        let construction = Construction::PolyQuotient { base: base.clone(), modulus: modulus.to_vec(), var };
        Self::from_tables(order, add, mul, zero, one, construction)
    }

    /// Idealization `Z/n ⋉ (Z/m_1 ⊕ .. ⊕ Z/m_k)`. Code of `(r, e_1, .., e_k)` is
    /// `r + n (e_1 + m_1 (e_2 + ..))`.
    pub fn idealization(n: u32, orders: &[u32]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {n}")));
        }
        if let Some(&m) = orders.iter().find(|&&m| m == 0 || !n.is_multiple_of(m)) {
            return Err(Error::InvalidModule(format!("module order {m} does not divide {n}")));
        }
        let module: usize = orders.iter().map(|&m| m as usize).product();
        let order = n as usize * module;
        Self::check_order(order)?;
        let radix: Vec<usize> = std::iter::once(n as usize).chain(orders.iter().map(|&m| m as usize)).collect();
        let split = |mut c: usize| -> Vec<usize> {
            radix
                .iter()
                .map(|&r| {
                    let digit = c % r;
                    c /= r;
                    digit
                })
                .collect()
        };
        let join = |v: &[usize]| v.iter().zip(&radix).rev().fold(0usize, |acc, (&x, &r)| acc * r + x) as u16;
        let parts: Vec<Vec<usize>> = (0..order).map(split).collect();

        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut buf = vec![0usize; radix.len()];
        for p in 0..order {
            for q in 0..order {
                let (u, v) = (&parts[p], &parts[q]);
                for k in 0..radix.len() {
                    buf[k] = (u[k] + v[k]) % radix[k];
                }
                add[p * order + q] = join(&buf);
                buf[0] = (u[0] * v[0]) % radix[0];
                for k in 1..radix.len() {
                    let m = radix[k];
                    buf[k] = ((u[0] % m) * v[k] + (v[0] % m) * u[k]) % m;
                }
                mul[p * order + q] = join(&buf);
            }
        }
        let construction = Construction::TrivialExtension { n, orders: orders.to_vec() };
        Self::from_tables(order, add, mul, Elem(0), Elem(1), construction)
    }

    /// Materializes a subring as its own ring. Subring codes follow the
    /// ascending order of the parent codes; the returned vector maps each
    /// subring code to its parent element.
    pub fn subring(&self, members: &ElemSet) -> Result<(FiniteRing, Vec<Elem>)> {
        if !members.contains(self.one()) || !members.contains(self.zero()) {
            return Err(Error::InvalidInput("subring must contain 0 and 1".into()));
        }
        let embed: Vec<Elem> = members.iter().collect();
        let mut index = vec![u16::MAX; self.order()];
        for (k, e) in embed.iter().enumerate() {
            index[e.index()] = k as u16;
        }
        let order = embed.len();
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                let (s, p) = (index[self.add(a, b).index()], index[self.mul(a, b).index()]);
                if s == u16::MAX || p == u16::MAX {
                    return Err(Error::InvalidInput(format!(
                        "subset is not closed under the ring operations at ({}, {})",
                        self.render(a),
                        self.render(b)
                    )));
                }
                add[i * order + j] = s;
                mul[i * order + j] = p;
            }
        }
        let zero = Elem(index[self.zero().index()]);
        let one = Elem(index[self.one().index()]);
        let construction = Construction::Subring { parent: self.clone(), embed: embed.clone() };
        let mut sub = Self::from_tables(order, add, mul, zero, one, construction)?;
        sub.bound = self.bound;
        Ok((sub, embed))
    }

    pub fn with_bound(&self, bound: usize) -> Self {
        FiniteRing { data: self.data.clone(), bound }
    }

    pub fn enumeration_bound(&self) -> usize {
        self.bound
    }

    pub(crate) fn ensure_enumerable(&self, what: &str) -> Result<()> {
        if self.order() > self.bound {
            return Err(Error::ResourceLimit { what: what.to_string(), size: self.order(), bound: self.bound });
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.data.id
    }

    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        self.id() == other.id()
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn construction(&self) -> &Construction {
        &self.data.construction
    }

    pub fn zero(&self) -> Elem {
        self.data.zero
    }

    pub fn one(&self) -> Elem {
        self.data.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order() as u16).map(Elem)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.data.add[a.index() * self.data.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.data.mul[a.index() * self.data.order + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.data.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// Multiplicative inverse by exhaustive search.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&b| self.mul(a, b) == self.one())
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// A pair of nonzero elements with zero product, if any.
    pub fn zero_divisor_pair(&self) -> Option<(Elem, Elem)> {
        let z = self.zero();
        self.elements()
            .filter(|&a| a != z)
            .flat_map(|a| self.elements().filter(move |&b| b >= a).map(move |b| (a, b)))
            .find(|&(a, b)| b != z && self.mul(a, b) == z)
    }

    pub fn is_domain(&self) -> bool {
        self.zero_divisor_pair().is_none()
    }

    pub fn is_field(&self) -> bool {
        self.elements().filter(|&a| a != self.zero()).all(|a| self.is_unit(a))
    }

    /// Tags a code with this ring's identity.
    pub fn element(&self, code: u16) -> Result<RingElement> {
        if code as usize >= self.order() {
            return Err(Error::InvalidInput(format!(
                "code {code} is not an element of a ring with {} elements",
                self.order()
            )));
        }
        Ok(RingElement { ring: self.id(), elem: Elem(code) })
    }

    pub fn tag(&self, e: Elem) -> RingElement {
        debug_assert!(e.index() < self.order());
        RingElement { ring: self.id(), elem: e }
    }

    /// Unwraps a tagged element, rejecting elements of any other ring.
    pub fn check(&self, x: RingElement) -> Result<Elem> {
        if x.ring != self.id() {
            return Err(Error::RingMismatch);
        }
        Ok(x.elem)
    }

    /// Exhaustive check of the commutative ring axioms. `O(order³)`.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let elems: Vec<Elem> = self.elements().collect();
        for &a in &elems {
            if self.add(a, self.zero()) != a || self.mul(a, self.one()) != a {
                return Err(format!("identity fails at {}", self.render(a)));
            }
            for &b in &elems {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("commutativity fails at ({}, {})", self.render(a), self.render(b)));
                }
                for &c in &elems {
                    let assoc_add = self.add(self.add(a, b), c) == self.add(a, self.add(b, c));
                    let assoc_mul = self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
                    let dist = self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c));
                    if !(assoc_add && assoc_mul && dist) {
                        return Err(format!(
                            "associativity or distributivity fails at ({}, {}, {})",
                            self.render(a),
                            self.render(b),
                            self.render(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Short human-readable name, e.g. `Z/4[i]`.
    pub fn describe(&self) -> String {
        match self.construction() {
            Construction::Zmod(n) => format!("Z/{n}"),
            Construction::Product(a, b) => format!("{} x {}", paren(&a.describe()), paren(&b.describe())),
            Construction::PolyQuotient { base, modulus, var } => {
                let poly = render_poly(base, modulus, &var.to_string());
                format!("{}[{var}]/({poly})", paren(&base.describe()))
            }
            Construction::TrivialExtension { n, orders } => {
                let module = if orders.is_empty() {
                    "0".to_string()
                } else {
                    orders.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join("+")
                };
                format!("Z/{n} ~ ({module})")
            }
            Construction::Subring { parent, embed } => {
                format!("subring of {} ({} elements)", parent.describe(), embed.len())
            }
        }
    }

    /// Human-readable rendering of an element, e.g. `3+2i` or `(1,0)`.
    pub fn render(&self, e: Elem) -> String {
        match self.construction() {
            Construction::Zmod(_) => e.0.to_string(),
            Construction::Product(a, b) => {
                let nb = b.order();
                let (x, y) = (Elem((e.index() / nb) as u16), Elem((e.index() % nb) as u16));
                format!("({},{})", a.render(x), b.render(y))
            }
            Construction::PolyQuotient { base, modulus, var } => {
                let coeffs = digits(e.index(), base.order(), modulus.len() - 1);
                render_poly(base, &coeffs, &var.to_string())
            }
            Construction::TrivialExtension { n, orders } => {
                let mut c = e.index();
                let r = c % *n as usize;
                c /= *n as usize;
                let mut module = Vec::new();
                for &m in orders {
                    module.push((c % m as usize).to_string());
                    c /= m as usize;
                }
                match module.len() {
                    0 => r.to_string(),
                    1 => format!("({r},{})", module[0]),
                    _ => format!("({r},({}))", module.join(",")),
                }
            }
            Construction::Subring { parent, embed } => parent.render(embed[e.index()]),
        }
    }

    pub fn render_set(&self, set: &ElemSet) -> String {
        let items: Vec<String> = set.iter().map(|e| self.render(e)).collect();
        format!("{{{}}}", items.join(", "))
    }
}

/// Little-endian digits of `code` in base `radix`.
pub(crate) fn digits(mut code: usize, radix: usize, len: usize) -> Vec<Elem> {
    (0..len)
        .map(|_| {
            let d = code % radix;
            code /= radix;
            Elem(d as u16)
        })
        .collect()
}

fn paren(s: &str) -> String {
    if s.contains(['+', ',', ' ', '-']) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

fn render_poly(base: &FiniteRing, coeffs: &[Elem], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == base.zero() {
            continue;
        }
        let monomial = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let coeff = base.render(c);
        terms.push(if k == 0 {
            coeff
        } else if c == base.one() {
            monomial
        } else {
            format!("{}{monomial}", paren(&coeff))
        });
    }
    if terms.is_empty() {
        base.render(base.zero())
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian(n: u32) -> FiniteRing {
        let z = FiniteRing::zmod(n).unwrap();
        FiniteRing::poly_quotient_with_var(&z, &[Elem(1), Elem(0), Elem(1)], 'i').unwrap()
    }

    #[test]
    fn zmod_basics() {
        let z2 = FiniteRing::zmod(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.one(), Elem(1));
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.mul(Elem(2), Elem(3)), Elem(0));
        assert!(matches!(FiniteRing::zmod(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(FiniteRing::zmod(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn z5_is_a_field_by_inverse_search() {
        let z5 = FiniteRing::zmod(5).unwrap();
        for a in 1..5u16 {
            let inv = (0..5u16).find(|&b| (a * b) % 5 == 1).unwrap();
            assert_eq!(z5.inverse(Elem(a)), Some(Elem(inv)));
        }
        assert!(z5.is_field());
        assert!(z5.is_domain());
        assert!(!FiniteRing::zmod(6).unwrap().is_domain());
    }

    #[test]
    fn gaussian_z4_table() {
        let z4 = FiniteRing::zmod(4).unwrap();
        // X^2 + 1
        let r = FiniteRing::poly_quotient_with_var(&z4, &[Elem(1), Elem(0), Elem(1)], 'i').unwrap();
        assert_eq!(r.order(), 16);
        let i = Elem(4);
        assert_eq!(r.render(i), "i");
        assert_eq!(r.mul(i, i), Elem(3));
        // (3+2i) renders and squares as (3+2i)^2 = 9 + 12i - 4 = 5 + 12i = 1 mod 4
        let x = Elem(3 + 2 * 4);
        assert_eq!(r.render(x), "3+2i");
        assert_eq!(r.mul(x, x), Elem(1));
        r.verify_axioms().unwrap();
    }

    #[test]
    fn poly_quotient_zero_divisors_and_degree_one() {
        let z5 = FiniteRing::zmod(5).unwrap();
        // X^2 - 1 = X^2 + 4
        let r = FiniteRing::poly_quotient(&z5, &[Elem(4), Elem(0), Elem(1)]).unwrap();
        assert_eq!(r.order(), 25);
        let one_plus_x = Elem(1 + 5);
        let one_minus_x = Elem(1 + 4 * 5);
        assert_eq!(r.mul(one_plus_x, one_minus_x), r.zero());

        let z2 = FiniteRing::zmod(2).unwrap();
        let lin = FiniteRing::poly_quotient(&z2, &[Elem(0), Elem(1)]).unwrap();
        assert_eq!(lin.order(), 2);
        assert!(find_isomorphism(&lin, &z2).is_some());

        let err = FiniteRing::poly_quotient(&z5, &[Elem(1), Elem(2)]);
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn product_rings() {
        let z2 = FiniteRing::zmod(2).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        let p = FiniteRing::product(&z2, &z3).unwrap();
        assert_eq!(p.order(), 6);
        let z6 = FiniteRing::zmod(6).unwrap();
        let iso = find_isomorphism(&p, &z6).expect("CRT isomorphism");
        assert_eq!(iso.len(), 6);

        let q = FiniteRing::product(&z2, &z2).unwrap();
        let (e1, e2) = (Elem(2), Elem(1)); // (1,0), (0,1)
        assert_eq!(q.render(e1), "(1,0)");
        assert_eq!(q.mul(e1, e2), q.zero());

        let z5 = FiniteRing::zmod(5).unwrap();
        let p55 = FiniteRing::product(&z5, &z5).unwrap();
        assert_eq!(p55.order(), 25);
        assert!(!p55.is_domain());
    }

    #[test]
    fn idealization_rejects_non_dividing_orders() {
        assert!(matches!(FiniteRing::idealization(4, &[3]), Err(Error::InvalidModule(_))));
        let r = FiniteRing::idealization(4, &[2]).unwrap();
        assert_eq!(r.order(), 8);
        r.verify_axioms().unwrap();
    }

    #[test]
    fn tagged_elements_reject_other_rings() {
        let a = FiniteRing::zmod(6).unwrap();
        let b = FiniteRing::zmod(6).unwrap();
        let x = a.element(3).unwrap();
        assert_eq!(a.check(x), Ok(Elem(3)));
        assert_eq!(b.check(x), Err(Error::RingMismatch));
        assert!(a.element(6).is_err());
    }

    #[test]
    fn gaussian_helper_builds_i_squared_minus_one() {
        let r = gaussian(10);
        let i = Elem(10);
        assert_eq!(r.mul(i, i), Elem(9));
    }
}
