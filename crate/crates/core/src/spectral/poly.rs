//! Dense integer polynomials: characteristic polynomials, gcds and Sturm
//! sequences. Coefficients are stored lowest degree first with no trailing
//! zeros; the zero polynomial is the empty vector.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        Poly(self.0.iter().map(|x| x / &c).collect())
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|x| -x).collect())
    }

    /// Pseudo-remainder `lc(b)^s * a mod b`, where `s <= deg a - deg b + 1`.
    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        self.pseudo_rem_steps(b).0
    }

    fn pseudo_rem_steps(&self, b: &Poly) -> (Poly, usize) {
        assert!(!b.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let db = b.degree();
        let lb = b.lead().clone();
        let mut steps = 0;
        while r.len() > db && !r.is_empty() {
            steps += 1;
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[dr - db + i] -= &lr * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly(r), steps)
    }

    /// Remainder with the same sign as the field remainder, made primitive
    /// up to a positive factor.
    fn signed_rem(&self, b: &Poly) -> Poly {
        let (r, steps) = self.pseudo_rem_steps(b);
        if r.is_zero() {
            return r;
        }
        let flip = b.lead().is_negative() && steps % 2 == 1;
        let c = r.content();
        let r = Poly(r.0.iter().map(|x| x / &c).collect());
        if flip {
            r.neg()
        } else {
            r
        }
    }

    /// Exact division; panics if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let ld = d.lead();
        if r.len() <= dd {
            assert!(Poly::new(r).is_zero(), "inexact polynomial division");
            return Poly(Vec::new());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let (qi, rem) = r[i + dd].div_rem(ld);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Poly::new(q)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree(&self) -> Poly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).primitive()
    }

    /// Sign of the polynomial at the rational `x`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        // p(a/b) b^d = sum c_i a^i b^(d-i), by Horner; b > 0 keeps the sign
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc.sign_cmp()
    }

    /// Evaluate exactly at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the leading coefficient times `(-1)^deg` when `at_neg_inf`.
    fn sign_at_infinity(&self, at_neg_inf: bool) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let s = self.lead().sign_cmp();
        if at_neg_inf && self.degree() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let lead = BigRational::from_integer(self.lead().abs());
        let max = self.0[..self.degree()]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::from_integer(max) / lead
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Sturm {
        let mut chain = vec![p.clone()];
        if p.degree() >= 1 {
            chain.push(p.derivative());
            loop {
                let k = chain.len();
                let r = chain[k - 2].signed_rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        Sturm { chain }
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots greater than `a`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        let inf = Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(false)));
        self.variations_at(a).saturating_sub(inf)
    }

    pub fn poly(&self) -> &Poly {
        &self.chain[0]
    }
}

/// Characteristic polynomial `det(xI - M)` of a square integer matrix by
/// Berkowitz's division-free recurrence.
pub fn charpoly(m: &[Vec<BigInt>]) -> Poly {
    let n = m.len();
    // coefficients highest degree first while building
    let mut vect = vec![BigInt::one()];
    for r in 0..n {
        // M_r = m[..r][..r], C = column r above the diagonal, R = row r left
        // of the diagonal, a = m[r][r]
        let mut q = Vec::with_capacity(r + 2);
        q.push(BigInt::one());
        q.push(-m[r][r].clone());
        let mut col: Vec<BigInt> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &m[r][j] * &col[j]).sum();
            q.push(-rc);
            col = (0..r)
                .map(|i| (0..r).map(|j| &m[i][j] * &col[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate().take(i + 1) {
                *slot += &q[i - j] * v;
            }
        }
        vect = next;
    }
    vect.reverse();
    Poly::new(vect)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn charpoly_small() {
        // x^2 - 5x + 6 - ... for [[1,2],[3,4]]: x^2 - 5x - 2
        assert_eq!(charpoly(&mat(&[&[1, 2], &[3, 4]])), p(&[-2, -5, 1]));
        // Q(K_3) = I + J: eigenvalues 4, 1, 1
        let q = charpoly(&mat(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]));
        assert_eq!(q, p(&[-4, 9, -6, 1]));
    }

    #[test]
    fn charpoly_matches_trace_and_det() {
        let m = mat(&[&[3, 1, 0, 1], &[1, 2, 1, 0], &[0, 1, 2, 1], &[1, 0, 1, 3]]);
        let c = charpoly(&m);
        assert_eq!(c, p(&[11, -40, 33, -10, 1]));
    }

    #[test]
    fn squarefree_and_gcd() {
        // (x - 1)^2 (x - 4)
        let f = p(&[-4, 9, -6, 1]);
        assert_eq!(f.squarefree(), p(&[4, -5, 1]));
        assert_eq!(f.gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[2, 3]).gcd(&p(&[5, 7])), p(&[1]));
    }

    #[test]
    fn sturm_counts() {
        let s = Sturm::new(&p(&[4, -5, 1]));
        assert_eq!(s.count(&r(0, 1), &r(5, 1)), 2);
        assert_eq!(s.count(&r(2, 1), &r(5, 1)), 1);
        assert_eq!(s.count(&r(1, 1), &r(4, 1)), 1);
        assert_eq!(s.count_above(&r(7, 2)), 1);
        assert_eq!(s.count_above(&r(4, 1)), 0);
        // x^2 - 2: roots +-sqrt 2
        let s = Sturm::new(&p(&[-2, 0, 1]));
        assert_eq!(s.count(&r(-2, 1), &r(2, 1)), 2);
        assert_eq!(s.count(&r(7, 5), &r(3, 2)), 1);
    }

    #[test]
    fn sign_at_rational() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at(&r(3, 2)), Ordering::Greater);
        assert_eq!(f.sign_at(&r(7, 5)), Ordering::Less);
        assert_eq!(p(&[4, -5, 1]).sign_at(&r(4, 1)), Ordering::Equal);
        assert_eq!(f.eval(&r(1, 2)), r(-7, 4));
    }
}
