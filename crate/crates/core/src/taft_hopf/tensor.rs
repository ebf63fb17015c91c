use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{render_terms, TaftElement, TaftMonomial};
use crate::cyclotomic::{CycContext, CycScalar};
use crate::error::{Error, Result};
use crate::quantum_plane_a::{mul_basis, AElement};

/// Which algebra a tensor slot belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    /// The Taft algebra.
    H,
    /// The algebra `A_n(w)`.
    A,
}

/// A basis element of one tensor slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    H(TaftMonomial),
    /// `u^m`, `0 <= m < n`.
    A(usize),
}

impl BasisKey {
    pub fn kind(self) -> FactorKind {
        match self {
            BasisKey::H(_) => FactorKind::H,
            BasisKey::A(_) => FactorKind::A,
        }
    }

    pub fn render(self) -> String {
        match self {
            BasisKey::H(m) => m.render(),
            BasisKey::A(m) => format!("u^{m}"),
        }
    }
}

/// One factor of a pure tensor.
#[derive(Debug, Clone)]
pub enum Factor {
    H(TaftElement),
    A(AElement),
}

impl Factor {
    fn kind(&self) -> FactorKind {
        match self {
            Factor::H(_) => FactorKind::H,
            Factor::A(_) => FactorKind::A,
        }
    }

    fn terms(&self) -> Vec<(BasisKey, CycScalar)> {
        match self {
            Factor::H(h) => h.terms().map(|(m, c)| (BasisKey::H(*m), c.clone())).collect(),
            Factor::A(a) => a.terms().map(|(m, c)| (BasisKey::A(m), c.clone())).collect(),
        }
    }
}

/// A sparse element of a tensor product of one to three factors, each `H`
/// or `A`. Multiplication is slotwise with no braiding.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    ctx: CycContext,
    kinds: Vec<FactorKind>,
    terms: BTreeMap<Vec<BasisKey>, CycScalar>,
}

fn check_arity(arity: usize) -> Result<()> {
    if (1..=3).contains(&arity) {
        Ok(())
    } else {
        Err(Error::ArityOverflow(arity))
    }
}

impl TensorElement {
    pub fn zero(ctx: &CycContext, kinds: &[FactorKind]) -> Result<Self> {
        check_arity(kinds.len())?;
        Ok(Self { ctx: ctx.clone(), kinds: kinds.to_vec(), terms: BTreeMap::new() })
    }

    /// `1 (x) ... (x) 1`.
    pub fn unit(ctx: &CycContext, kinds: &[FactorKind]) -> Result<Self> {
        let mut t = Self::zero(ctx, kinds)?;
        let key = kinds
            .iter()
            .map(|k| match k {
                FactorKind::H => BasisKey::H(TaftMonomial::ONE),
                FactorKind::A => BasisKey::A(0),
            })
            .collect();
        t.add_term(key, ctx.one());
        Ok(t)
    }

    /// The pure tensor of the given factors, expanded bilinearly.
    pub fn try_pure(ctx: &CycContext, factors: Vec<Factor>) -> Result<Self> {
        let kinds: Vec<_> = factors.iter().map(Factor::kind).collect();
        let mut acc = Self::zero(ctx, &kinds)?;
        let mut partial: Vec<(Vec<BasisKey>, CycScalar)> = vec![(Vec::new(), ctx.one())];
        for f in &factors {
            let ft = f.terms();
            partial = partial
                .iter()
                .flat_map(|(keys, c)| {
                    ft.iter().map(move |(k, d)| {
                        let mut keys = keys.clone();
                        keys.push(*k);
                        (keys, c * d)
                    })
                })
                .collect();
        }
        for (keys, c) in partial {
            acc.add_term(keys, c);
        }
        Ok(acc)
    }

    /// [`TensorElement::try_pure`], panicking on an arity outside `1..=3`.
    pub fn pure(ctx: &CycContext, factors: Vec<Factor>) -> Self {
        Self::try_pure(ctx, factors).expect("tensor arity must be 1..=3")
    }

    pub fn context(&self) -> &CycContext {
        &self.ctx
    }

    pub fn kinds(&self) -> &[FactorKind] {
        &self.kinds
    }

    pub fn arity(&self) -> usize {
        self.kinds.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[BasisKey], &CycScalar)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, keys: &[BasisKey]) -> CycScalar {
        self.terms.get(keys).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add_term(&mut self, keys: Vec<BasisKey>, c: CycScalar) {
        debug_assert_eq!(keys.len(), self.kinds.len());
        debug_assert!(keys.iter().zip(&self.kinds).all(|(k, kind)| k.kind() == *kind));
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&keys) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&keys);
                }
            }
            None => {
                self.terms.insert(keys, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.kinds != other.kinds {
            return Err(Error::KindMismatch {
                expected: self.kinds.clone(),
                found: other.kinds.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self { ctx: self.ctx.clone(), kinds: self.kinds.clone(), terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Slotwise product `(p1 (x) p2)(q1 (x) q2) = p1 q1 (x) p2 q2`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.ctx.order();
        let mut out = Self { ctx: self.ctx.clone(), kinds: self.kinds.clone(), terms: BTreeMap::new() };
        for (k1, c1) in &self.terms {
            'pairs: for (k2, c2) in &other.terms {
                let mut twist = 0i64;
                let mut keys = Vec::with_capacity(k1.len());
                for (a, b) in k1.iter().zip(k2) {
                    match (a, b) {
                        (BasisKey::H(p), BasisKey::H(q)) => match p.mul(*q, n) {
                            Some((t, m)) => {
                                twist += t;
                                keys.push(BasisKey::H(m));
                            }
                            None => continue 'pairs,
                        },
                        (BasisKey::A(p), BasisKey::A(q)) => {
                            let (wraps, m) = mul_basis(n, *p, *q);
                            twist += wraps as i64;
                            keys.push(BasisKey::A(m));
                        }
                        _ => unreachable!("kinds checked"),
                    }
                }
                out.add_term(keys, self.ctx.omega_pow(twist) * c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let unit = Self::unit(&self.ctx, &self.kinds).expect("arity already valid");
        (0..e).fold(unit, |acc, _| &acc * self)
    }

    /// Lifts a linear map across one slot. `f` sends each basis element of the
    /// slot to a tensor whose kinds must be `out_kinds`; the result has that
    /// slot replaced by `out_kinds`.
    pub fn map_slot<F>(&self, slot: usize, out_kinds: &[FactorKind], mut f: F) -> Result<Self>
    where
        F: FnMut(BasisKey) -> Result<TensorElement>,
    {
        if slot >= self.arity() {
            return Err(Error::SlotOutOfRange { slot, arity: self.arity() });
        }
        let mut kinds = self.kinds[..slot].to_vec();
        kinds.extend_from_slice(out_kinds);
        kinds.extend_from_slice(&self.kinds[slot + 1..]);
        let mut out = Self::zero(&self.ctx, &kinds)?;
        for (keys, c) in &self.terms {
            let img = f(keys[slot])?;
            if img.ctx != self.ctx {
                return Err(Error::ContextMismatch);
            }
            if img.kinds != out_kinds {
                return Err(Error::KindMismatch {
                    expected: out_kinds.to_vec(),
                    found: img.kinds.clone(),
                });
            }
            for (ikeys, d) in &img.terms {
                let mut nk = keys[..slot].to_vec();
                nk.extend_from_slice(ikeys);
                nk.extend_from_slice(&keys[slot + 1..]);
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a linear functional to one slot, lowering the arity by one.
    pub fn contract_slot<F>(&self, slot: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(BasisKey) -> CycScalar,
    {
        if slot >= self.arity() {
            return Err(Error::SlotOutOfRange { slot, arity: self.arity() });
        }
        let mut kinds = self.kinds.clone();
        kinds.remove(slot);
        let mut out = Self::zero(&self.ctx, &kinds)?;
        for (keys, c) in &self.terms {
            let v = f(keys[slot]);
            let mut nk = keys.clone();
            nk.remove(slot);
            out.add_term(nk, c * &v);
        }
        Ok(out)
    }

    /// Reads an arity-1 `H` tensor as a Taft element.
    pub fn to_taft(&self) -> Option<TaftElement> {
        (self.kinds == [FactorKind::H]).then(|| {
            let mut e = TaftElement::zero(&self.ctx);
            for (k, c) in &self.terms {
                if let BasisKey::H(m) = k[0] {
                    e.add_term(m, c.clone());
                }
            }
            e
        })
    }

    /// Reads an arity-1 `A` tensor as an element of `A`.
    pub fn to_a(&self) -> Option<AElement> {
        (self.kinds == [FactorKind::A]).then(|| {
            let mut e = AElement::zero(&self.ctx);
            for (k, c) in &self.terms {
                if let BasisKey::A(m) = k[0] {
                    e.add_basis(m, c);
                }
            }
            e
        })
    }

    pub fn render(&self, symbol: &str) -> String {
        render_terms(
            self.terms.iter().map(|(keys, c)| {
                let b: Vec<String> = keys.iter().map(|k| k.render()).collect();
                (b.join(" ⊗ "), c)
            }),
            symbol,
        )
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("ω"))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement{:?}({})", self.kinds, self.render("ω"))
    }
}

macro_rules! tensor_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&TensorElement> for &TensorElement {
            type Output = TensorElement;
            fn $m(self, rhs: &TensorElement) -> TensorElement {
                self.$try(rhs).expect("tensor operands must share context and kinds")
            }
        }
        impl $tr<TensorElement> for TensorElement {
            type Output = TensorElement;
            fn $m(self, rhs: TensorElement) -> TensorElement {
                (&self).$m(&rhs)
            }
        }
    };
}

tensor_binop!(Add, add, try_add);
tensor_binop!(Sub, sub, try_sub);
tensor_binop!(Mul, mul, try_mul);

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-self.ctx.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FactorKind::{A, H};

    fn ctx(n: usize) -> CycContext {
        CycContext::new(n).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let c = ctx(4);
        let p = TaftElement::monomial(&c, 1, 2) + TaftElement::g(&c);
        let q = AElement::u(&c);
        let t = TensorElement::pure(&c, vec![Factor::H(p), Factor::A(q)]);
        let one = TensorElement::unit(&c, &[H, A]).unwrap();
        assert_eq!(&one * &t, t);
        assert_eq!(&t * &one, t);
    }

    #[test]
    fn map_grouplike_slot() {
        let c = ctx(3);
        let t = TensorElement::pure(&c, vec![Factor::H(TaftElement::g(&c)), Factor::A(AElement::u(&c))]);
        let lifted = t
            .map_slot(0, &[H, H], |k| match k {
                BasisKey::H(m) => Ok(TaftElement::basis(&c, m).coproduct()),
                BasisKey::A(_) => unreachable!(),
            })
            .unwrap();
        let g = TaftElement::g(&c);
        let expect = TensorElement::pure(
            &c,
            vec![Factor::H(g.clone()), Factor::H(g), Factor::A(AElement::u(&c))],
        );
        assert_eq!(lifted, expect);
        assert_eq!(lifted.kinds(), &[H, H, A]);
    }

    #[test]
    fn square_of_coproduct_of_x() {
        let c = ctx(5);
        let x = TaftElement::x(&c);
        let g = TaftElement::g(&c);
        let one = TaftElement::one(&c);
        let dx = TensorElement::pure(&c, vec![Factor::H(x.clone()), Factor::H(one.clone())])
            + TensorElement::pure(&c, vec![Factor::H(g.clone()), Factor::H(x.clone())]);
        let gx = &g * &x;
        let expect = TensorElement::pure(&c, vec![Factor::H(&x * &x), Factor::H(one)])
            + TensorElement::pure(&c, vec![Factor::H(gx.scale(&(c.one() + c.omega()))), Factor::H(x.clone())])
            + TensorElement::pure(&c, vec![Factor::H(&g * &g), Factor::H(&x * &x)]);
        assert_eq!(dx.pow(2), expect);
    }

    #[test]
    fn errors() {
        let c = ctx(3);
        assert_eq!(TensorElement::zero(&c, &[H, H, H, A]).unwrap_err(), Error::ArityOverflow(4));
        assert_eq!(TensorElement::zero(&c, &[]).unwrap_err(), Error::ArityOverflow(0));
        let ha = TensorElement::unit(&c, &[H, A]).unwrap();
        let hh = TensorElement::unit(&c, &[H, H]).unwrap();
        assert!(matches!(ha.try_mul(&hh), Err(Error::KindMismatch { .. })));
        let hha = TensorElement::unit(&c, &[H, H, A]).unwrap();
        let overflow = hha.map_slot(0, &[H, H], |k| match k {
            BasisKey::H(m) => Ok(TaftElement::basis(&c, m).coproduct()),
            BasisKey::A(_) => unreachable!(),
        });
        assert_eq!(overflow.unwrap_err(), Error::ArityOverflow(4));
        assert!(matches!(ha.map_slot(2, &[H], |_| unreachable!()), Err(Error::SlotOutOfRange { .. })));
        let wrong = ha.map_slot(1, &[A], |_| Ok(hh.clone()));
        assert!(matches!(wrong, Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn a_slot_wraps_with_omega() {
        let c = ctx(3);
        let u = AElement::u(&c);
        let t = TensorElement::pure(&c, vec![Factor::A(u)]);
        let cube = t.pow(3);
        assert_eq!(cube.to_a().unwrap(), AElement::one(&c).scale(&c.omega()));
    }

    #[test]
    fn contraction_by_counit() {
        let c = ctx(4);
        let d = TaftElement::monomial(&c, 2, 1).coproduct();
        let left = d
            .contract_slot(0, |k| match k {
                BasisKey::H(m) => TaftElement::basis(&c, m).counit(),
                BasisKey::A(_) => unreachable!(),
            })
            .unwrap();
        assert_eq!(left.to_taft().unwrap(), TaftElement::monomial(&c, 2, 1));
    }

    #[test]
    fn rendering() {
        let c = ctx(2);
        let t = TensorElement::pure(&c, vec![Factor::H(TaftElement::g(&c)), Factor::A(AElement::u(&c).scale(&c.from_int(2)))]);
        assert_eq!(t.render("w"), "(2) x^0 g^1 ⊗ u^1");
    }
}
