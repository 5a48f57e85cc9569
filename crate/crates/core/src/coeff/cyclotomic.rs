//! The cyclotomic field Q(ζ_d) in the power basis modulo Φ_d.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use smallvec::{smallvec, SmallVec};

use super::rational::Q;

const TABLE_LIMIT: usize = 64;

fn compute_cyclotomic(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Φ_k for every proper divisor k of n.
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for k in 1..n {
        if n % k == 0 {
            let div = cyclotomic_poly(k);
            num = divide_monic(&num, &div);
        }
    }
    num
}

fn divide_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = rem[i + db];
        q[i] = c;
        for j in 0..=db {
            rem[i + j] -= c * b[j];
        }
    }
    q
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    if n < TABLE_LIMIT {
        let t = TABLE.get_or_init(|| {
            let mut t = vec![vec![1]];
            for k in 1..TABLE_LIMIT {
                let p = if k == 1 { vec![-1, 1] } else { compute_table_entry(&t, k) };
                t.push(p);
            }
            t
        });
        return t[n].clone();
    }
    compute_cyclotomic(n)
}

fn compute_table_entry(t: &[Vec<i64>], n: usize) -> Vec<i64> {
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for (k, p) in t.iter().enumerate().take(n).skip(1) {
        if n % k == 0 {
            num = divide_monic(&num, p);
        }
    }
    num
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// An element of Q(ζ_d). Rational values are always stored with `d = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    d: u32,
    coords: SmallVec<[Q; 2]>,
}

fn reduce_mod(mut c: Vec<Q>, d: u32) -> SmallVec<[Q; 2]> {
    let phi = cyclotomic_poly(d as usize);
    let deg = phi.len() - 1;
    while c.len() > deg {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let base = c.len() - deg;
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                c[base + j] = c[base + j].sub(&top.mul(&Q::int(pj)));
            }
        }
    }
    c.resize(deg, Q::zero());
    SmallVec::from_vec(c)
}

impl Cyclotomic {
    fn normalized(d: u32, coords: SmallVec<[Q; 2]>) -> Cyclotomic {
        if d > 1 && coords.iter().skip(1).all(Q::is_zero) {
            return Cyclotomic { d: 1, coords: smallvec![coords[0].clone()] };
        }
        Cyclotomic { d, coords }
    }

    pub fn rational(q: Q) -> Cyclotomic {
        Cyclotomic { d: 1, coords: smallvec![q] }
    }

    pub fn zero() -> Cyclotomic {
        Cyclotomic::rational(Q::zero())
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::rational(Q::one())
    }

    pub fn int(n: i64) -> Cyclotomic {
        Cyclotomic::rational(Q::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::rational(Q::frac(n, d))
    }

    /// ζ_d^k.
    pub fn zeta_pow(d: u32, k: i64) -> Cyclotomic {
        assert!(d >= 1, "conductor must be positive");
        let e = k.rem_euclid(d as i64) as usize;
        let mut c = vec![Q::zero(); e + 1];
        c[e] = Q::one();
        Cyclotomic::normalized(d, reduce_mod(c, d))
    }

    /// Conductor of the stored representation (1 for rationals).
    pub fn conductor(&self) -> u32 {
        self.d
    }

    /// Coordinates in the power basis 1, ζ, ζ², … of Q(ζ_conductor).
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.d == 1 && self.coords[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.d == 1 && self.coords[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        (self.d == 1).then(|| &self.coords[0])
    }

    fn lift(&self, target: u32) -> SmallVec<[Q; 2]> {
        if self.d == target {
            return self.coords.clone();
        }
        let step = (target / self.d) as usize;
        let mut c = vec![Q::zero(); (self.coords.len() - 1) * step + 1];
        for (j, q) in self.coords.iter().enumerate() {
            c[j * step] = q.clone();
        }
        reduce_mod(c, target)
    }

    fn common(&self, o: &Cyclotomic) -> u32 {
        if self.d == o.d {
            self.d
        } else {
            self.d.lcm(&o.d)
        }
    }

    pub fn add(&self, o: &Cyclotomic) -> Cyclotomic {
        if self.d == 1 && o.d == 1 {
            return Cyclotomic::rational(self.coords[0].add(&o.coords[0]));
        }
        let m = self.common(o);
        let a = self.lift(m);
        let b = o.lift(m);
        let c = a.iter().zip(b.iter()).map(|(x, y)| x.add(y)).collect();
        Cyclotomic::normalized(m, c)
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { d: self.d, coords: self.coords.iter().map(Q::neg).collect() }
    }

    pub fn sub(&self, o: &Cyclotomic) -> Cyclotomic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Cyclotomic) -> Cyclotomic {
        if self.d == 1 && o.d == 1 {
            return Cyclotomic::rational(self.coords[0].mul(&o.coords[0]));
        }
        if o.d == 1 {
            return self.scale(&o.coords[0]);
        }
        if self.d == 1 {
            return o.scale(&self.coords[0]);
        }
        let m = self.common(o);
        let a = self.lift(m);
        let b = o.lift(m);
        let mut c = vec![Q::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] = c[i + j].add(&x.mul(y));
                }
            }
        }
        Cyclotomic::normalized(m, reduce_mod(c, m))
    }

    pub fn scale(&self, q: &Q) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic { d: self.d, coords: self.coords.iter().map(|c| c.mul(q)).collect() }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Cyclotomic> {
        if self.d == 1 {
            return self.coords[0].recip().map(Cyclotomic::rational);
        }
        if self.is_zero() {
            return None;
        }
        // Extended Euclid in Q[x] between a and Φ_d.
        let phi: Vec<Q> = cyclotomic_poly(self.d as usize).into_iter().map(Q::int).collect();
        let a: Vec<Q> = trim(self.coords.to_vec());
        let (g, s) = ext_gcd(a, phi);
        // g is a nonzero constant because Φ_d is irreducible.
        let c = g[0].recip()?;
        let s: Vec<Q> = s.into_iter().map(|x| x.mul(&c)).collect();
        Some(Cyclotomic::normalized(self.d, reduce_mod(s, self.d)))
    }

    pub fn div(&self, o: &Cyclotomic) -> Option<Cyclotomic> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: u32) -> Cyclotomic {
        let mut r = Cyclotomic::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// True when the value is a single power-basis term `c·ζ^k`.
    pub fn single_term(&self) -> Option<(usize, &Q)> {
        let mut it = self.coords.iter().enumerate().filter(|(_, q)| !q.is_zero());
        let first = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(first)
        }
    }
}

fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.len() > 1 && v.last().is_some_and(Q::is_zero) {
        v.pop();
    }
    v
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![Q::zero()], trim(r));
    }
    let lead = b[db].recip().expect("nonzero leading coefficient");
    let mut q = vec![Q::zero(); r.len() - db];
    for i in (0..r.len() - db).rev() {
        let c = r[i + db].mul(&lead);
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            r[i + j] = r[i + j].sub(&c.mul(&b[j]));
        }
        q[i] = c;
    }
    (trim(q), trim(r))
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut c = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = c[i + j].add(&x.mul(y));
        }
    }
    trim(c)
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let z = Q::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z))).collect())
}

/// Returns (g, s) with s·a ≡ g (mod b).
fn ext_gcd(a: Vec<Q>, b: Vec<Q>) -> (Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![Q::one()], vec![Q::zero()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d.cmp(&other.d).then_with(|| self.coords.cmp(&other.coords))
    }
}

impl fmt::Display for Cyclotomic {
    /// Rationals print plainly; other values print as a parenthesized sum
    /// of `c*z{d}^k` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        let mut parts = Vec::new();
        for (k, q) in self.coords.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let z = match k {
                0 => String::new(),
                1 => format!("z{}", self.d),
                _ => format!("z{}^{}", self.d, k),
            };
            let (neg, mag) = if q.is_negative() { (true, q.neg()) } else { (false, q.clone()) };
            let body = if z.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                z
            } else {
                format!("{}*{}", mag, z)
            };
            parts.push((neg, body));
        }
        write!(f, "(")?;
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(70), compute_cyclotomic(70));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta_identities() {
        let m = Cyclotomic::zeta_pow(2, 1);
        assert_eq!(m, Cyclotomic::int(-1));
        assert!(m.mul(&m).is_one());
        for d in 1..=8u32 {
            let z = Cyclotomic::zeta_pow(d, 1);
            assert!(z.pow(d).is_one());
        }
    }

    #[test]
    fn character_orthogonality() {
        for d in 1..=6u32 {
            for m in 0..d as i64 {
                let mut s = Cyclotomic::zero();
                for k in 0..d as i64 {
                    s = s.add(&Cyclotomic::zeta_pow(d, m * k));
                }
                let expect = if m == 0 { Cyclotomic::int(d as i64) } else { Cyclotomic::zero() };
                assert_eq!(s, expect, "d={} m={}", d, m);
            }
        }
    }

    #[test]
    fn inverses() {
        let z3 = Cyclotomic::zeta_pow(3, 1);
        let a = z3.add(&Cyclotomic::int(2));
        let ai = a.inv().unwrap();
        assert!(a.mul(&ai).is_one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn mixed_conductors() {
        let z3 = Cyclotomic::zeta_pow(3, 1);
        let z2 = Cyclotomic::zeta_pow(4, 1);
        let p = z3.mul(&z2);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 7));
    }

    #[test]
    fn rendering() {
        let z3 = Cyclotomic::zeta_pow(3, 1);
        assert_eq!(z3.to_string(), "(z3)");
        assert_eq!(z3.mul(&z3).to_string(), "(-1 - z3)");
        assert_eq!(Cyclotomic::frac(-1, 2).to_string(), "-1/2");
    }
}
