//! Univariate rational functions in canonical form: the denominator is a
//! monic polynomial with nonzero constant term and is coprime to the
//! numerator; all monomial factors live in the (Laurent) numerator.

use super::laurent::{LaurentPoly, Var};
use super::linalg;
use super::ring::{Field, Q, Ring};


#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

type Dense = Vec<Q>;

fn to_dense(p: &LaurentPoly) -> (i64, Dense) {
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(0);
    let mut v = vec![Q::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(var: Var, shift: i64, v: &[Q]) -> LaurentPoly {
    LaurentPoly::from_terms(var, v.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
}

fn strip(v: &mut Dense) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    strip(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1;
        let c = &r[k] / &lead;
        let off = k - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &c * bc;
        }
        strip(&mut r);
    }
    r
}

fn monic(mut v: Dense) -> Dense {
    strip(&mut v);
    if let Some(l) = v.last().cloned() {
        for c in v.iter_mut() {
            *c /= &l;
        }
    }
    v
}

/// Monic gcd of two polynomials in dense form.
pub fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = monic(a.to_vec());
    let mut y = monic(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = monic(rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let var = if den.is_constant() { num.var } else { den.var };
        if num.is_zero() {
            return Some(RationalFunction { num: LaurentPoly::zero_in(var), den: LaurentPoly::one() });
        }
        let (nl, nd) = to_dense(&num);
        let (dl, dd) = to_dense(&den);
        let g = poly_gcd(&nd, &dd);
        let (nd, dd) = if g.len() > 1 {
            let gp = from_dense(var, 0, &g);
            let n2 = from_dense(var, 0, &nd).div_exact(&gp).expect("gcd divides");
            let d2 = from_dense(var, 0, &dd).div_exact(&gp).expect("gcd divides");
            (to_dense(&n2).1, to_dense(&d2).1)
        } else {
            (nd, dd)
        };
        let lead = dd.last().unwrap().clone();
        let num = from_dense(var, nl - dl, &nd).scale(&lead.recip());
        let den = from_dense(var, 0, &dd).scale(&lead.recip());
        Some(RationalFunction { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        RationalFunction::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn radd(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RationalFunction::new(self.num.radd(&o.num), self.den.clone()).unwrap();
        }
        RationalFunction::new(
            self.num.rmul(&o.den).radd(&o.num.rmul(&self.den)),
            self.den.rmul(&o.den),
        )
        .unwrap()
    }
    fn rsub(&self, o: &Self) -> Self {
        self.radd(&o.rneg())
    }
    fn rmul(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return RationalFunction::from_poly(self.num.rmul(&o.num));
        }
        RationalFunction::new(self.num.rmul(&o.num), self.den.rmul(&o.den)).unwrap()
    }
    fn rneg(&self) -> Self {
        RationalFunction { num: self.num.rneg(), den: self.den.clone() }
    }
    fn from_q(c: &Q) -> Self {
        RationalFunction::from_poly(LaurentPoly::from_q(c))
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }
    fn unit_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            RationalFunction::new(self.den.clone(), self.num.clone())
        }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Field for RationalFunction {
    /// Polynomial systems go through fraction-free elimination.
    fn solve_system(a: &[Vec<Self>], b: &[Self]) -> linalg::Solution<Self> {
        let polys: Option<Vec<Vec<LaurentPoly>>> = a.iter().map(|r| r.iter().map(|x| x.as_laurent()).collect()).collect();
        let rhs: Option<Vec<LaurentPoly>> = b.iter().map(|x| x.as_laurent()).collect();
        if let (Some(pa), Some(pb)) = (polys, rhs) {
            if let Some(s) = linalg::solve_fraction_free(&pa, &pb) {
                return s;
            }
        }
        linalg::solve(a, b)
    }
}

/// Leading coefficient sign convention check used in tests.
pub fn den_is_monic(r: &RationalFunction) -> bool {
    r.den.max_exp().map(|e| r.den.coeff(e).is_one()).unwrap_or(false) && r.den.min_exp() == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{q, qf};

    fn x() -> LaurentPoly {
        LaurentPoly::ahat(1)
    }

    #[test]
    fn canonical_cancellation() {
        let one = LaurentPoly::one();
        let xm1 = x().rsub(&one);
        let xp1 = x().radd(&one);
        let r = RationalFunction::new(xm1.rmul(&xp1).scale(&q(3)), xm1.scale(&q(6))).unwrap();
        assert_eq!(r, RationalFunction::from_poly(xp1.scale(&qf(1, 2))));
        assert!(den_is_monic(&r));
    }

    #[test]
    fn monomials_move_to_numerator() {
        let r = RationalFunction::new(LaurentPoly::one(), x().rmul(&x()).radd(&x())).unwrap();
        assert_eq!(r.num(), &LaurentPoly::ahat(-1));
        assert!(den_is_monic(&r));
    }

    #[test]
    fn field_ops() {
        let one = LaurentPoly::one();
        let a = RationalFunction::new(one.clone(), x().rsub(&one)).unwrap();
        let b = RationalFunction::new(one.clone(), x().radd(&one)).unwrap();
        let s = a.radd(&b);
        let expect = RationalFunction::new(x().scale(&q(2)), x().rmul(&x()).rsub(&one)).unwrap();
        assert_eq!(s, expect);
        assert!(s.rmul(&s.inv().unwrap()).is_one());
    }
}
