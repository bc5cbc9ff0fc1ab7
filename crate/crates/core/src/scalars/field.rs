use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which ground field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// The cyclotomic field ℚ(ζ_N); `Cyclotomic(1)` and `Cyclotomic(2)` are ℚ.
    Cyclotomic(u32),
    /// The prime field GF(p).
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Cyclotomic(_) => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `cyclotomic:N`, `q`, `rational`, `gf:p`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || Error::InvalidInput(format!("unrecognised field `{s}` (expected cyclotomic:N or gf:p)"));
        if t == "q" || t == "rational" || t == "rationals" {
            return Ok(FieldSpec::Cyclotomic(1));
        }
        let (kind, num) = t.split_once(':').ok_or_else(bad)?;
        let n: u64 = num.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "cyclotomic" | "cyc" => {
                if n == 0 || n > 1000 {
                    return Err(Error::InvalidInput(format!("cyclotomic conductor {n} out of range 1..=1000")));
                }
                Ok(FieldSpec::Cyclotomic(n as u32))
            }
            "gf" | "prime" => {
                if !is_prime(n) {
                    return Err(Error::InvalidInput(format!("gf:{n}: {n} is not prime")));
                }
                if n >= 1 << 31 {
                    return Err(Error::InvalidInput(format!("gf:{n}: primes above 2^31 are not supported")));
                }
                Ok(FieldSpec::Prime(n))
            }
            _ => Err(bad()),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

struct FieldData {
    spec: FieldSpec,
    /// Degree of the field over its prime field.
    degree: usize,
    /// Monic N-th cyclotomic polynomial, low degree first (cyclotomic fields only).
    phi: Vec<BigInt>,
    /// `reduce[k]` is x^(degree + k) reduced modulo phi, for k < degree - 1.
    reduce: Vec<Vec<BigRational>>,
}

/// A ground field.  Cheap to clone; two handles are equal when their specs are.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_poly_div(&num, &div);
        }
    }
    num
}

fn exact_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = rem.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
    }
    q
}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        match spec {
            FieldSpec::Cyclotomic(n) => {
                let phi = cyclotomic_polynomial(n);
                let degree = phi.len() - 1;
                let mut reduce = Vec::new();
                // x^degree = -(phi_0 + ... + phi_{d-1} x^{d-1})
                let mut cur: Vec<BigRational> = phi[..degree].iter().map(|c| BigRational::from_integer(-c)).collect();
                for _ in 0..degree.saturating_sub(1) {
                    reduce.push(cur.clone());
                    // multiply by x and reduce again
                    let top = cur[degree - 1].clone();
                    let mut next = vec![BigRational::zero(); degree];
                    for i in (1..degree).rev() {
                        next[i] = cur[i - 1].clone();
                    }
                    for i in 0..degree {
                        next[i] -= &top * BigRational::from_integer(phi[i].clone());
                    }
                    cur = next;
                }
                Field(Arc::new(FieldData { spec, degree, phi, reduce }))
            }
            FieldSpec::Prime(p) => {
                assert!(is_prime(p), "gf:{p} is not prime");
                Field(Arc::new(FieldData { spec, degree: 1, phi: Vec::new(), reduce: Vec::new() }))
            }
        }
    }

    pub fn rationals() -> Field {
        Field::new(FieldSpec::Cyclotomic(1))
    }

    pub fn cyclotomic(n: u32) -> Field {
        Field::new(FieldSpec::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Field {
        Field::new(FieldSpec::Prime(p))
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.characteristic()
    }

    /// Degree over the prime field: φ(N) for ℚ(ζ_N), 1 for GF(p).
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Conductor N for ℚ(ζ_N); `None` for prime fields.
    pub fn conductor(&self) -> Option<u32> {
        match self.0.spec {
            FieldSpec::Cyclotomic(n) => Some(n),
            FieldSpec::Prime(_) => None,
        }
    }

    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.0.phi
    }

    pub fn zero(&self) -> FieldElement {
        let repr = match self.0.spec {
            FieldSpec::Cyclotomic(_) => Repr::Cyc(vec![BigRational::zero(); self.0.degree]),
            FieldSpec::Prime(_) => Repr::Mod(0),
        };
        FieldElement { field: self.clone(), repr }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_rational(&BigRational::from_integer(BigInt::from(v))).expect("integers embed in every field")
    }

    /// Image of a rational number; fails only when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        match self.0.spec {
            FieldSpec::Cyclotomic(_) => {
                let mut c = vec![BigRational::zero(); self.0.degree];
                c[0] = q.clone();
                Ok(FieldElement { field: self.clone(), repr: Repr::Cyc(c) })
            }
            FieldSpec::Prime(p) => {
                let num = mod_bigint(q.numer(), p);
                let den = mod_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::InvalidInput(format!("{q} has a denominator divisible by {p}")));
                }
                Ok(FieldElement { field: self.clone(), repr: Repr::Mod(mul_mod(num, inv_mod(den, p), p)) })
            }
        }
    }

    /// ζ_N^k, the k-th power of the chosen primitive root.  Errors for prime fields.
    pub fn zeta_pow(&self, k: i64) -> Result<FieldElement> {
        let n = match self.0.spec {
            FieldSpec::Cyclotomic(n) => n as i64,
            FieldSpec::Prime(p) => {
                return Err(Error::InvalidInput(format!("`z` is not available in gf:{p}")));
            }
        };
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![BigRational::zero(); self.0.degree.max(e + 1)];
        coeffs[e] = BigRational::one();
        Ok(self.from_poly(coeffs))
    }

    /// Element with the given power-basis coefficients (any length; reduced modulo Φ_N).
    pub fn from_poly(&self, mut coeffs: Vec<BigRational>) -> FieldElement {
        let d = self.0.degree;
        match self.0.spec {
            FieldSpec::Cyclotomic(n) => {
                // First fold powers ≥ N using ζ^N = 1, then reduce by Φ_N.
                let n = n as usize;
                if coeffs.len() > n {
                    let extra: Vec<BigRational> = coeffs.drain(n..).collect();
                    for (i, c) in extra.into_iter().enumerate() {
                        coeffs[i % n] += c;
                    }
                }
                while coeffs.len() > d {
                    let top = coeffs.pop().unwrap();
                    if top.is_zero() {
                        continue;
                    }
                    let k = coeffs.len() - d;
                    if k < self.0.reduce.len() {
                        for (i, r) in self.0.reduce[k].iter().enumerate() {
                            if !r.is_zero() {
                                coeffs[i] += &top * r;
                            }
                        }
                    } else {
                        // General fallback: subtract top * x^k * phi.
                        for (i, pc) in self.0.phi.iter().enumerate().take(d) {
                            coeffs[k + i] -= &top * BigRational::from_integer(pc.clone());
                        }
                    }
                }
                coeffs.resize(d, BigRational::zero());
                FieldElement { field: self.clone(), repr: Repr::Cyc(coeffs) }
            }
            FieldSpec::Prime(_) => {
                let v = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
                self.from_rational(&v).expect("prime field coefficient with valid denominator")
            }
        }
    }

    /// Complex image of ζ_N under the embedding ζ ↦ exp(2πi k / N).
    pub(crate) fn embed(&self, x: &FieldElement, k: u32) -> num_complex::Complex64 {
        let n = self.conductor().unwrap_or(1) as f64;
        match &x.repr {
            Repr::Cyc(c) => {
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for (j, cj) in c.iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    let ang = 2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / n;
                    acc += num_complex::Complex64::from_polar(rational_to_f64(cj), ang);
                }
                acc
            }
            Repr::Mod(v) => num_complex::Complex64::new(*v as f64, 0.0),
        }
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    let n = q.numer().to_f64().unwrap_or(f64::NAN);
    let d = q.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

fn mod_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Cyc(Vec<BigRational>),
    Mod(u64),
}

/// An exact element of a [`Field`], always stored in canonical form.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field == other.field
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on canonical coefficient vectors (constant term first).
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Cyc(a), Repr::Cyc(b)) => a.cmp(b),
            (Repr::Mod(a), Repr::Mod(b)) => a.cmp(b),
            (Repr::Cyc(_), Repr::Mod(_)) => Ordering::Less,
            (Repr::Mod(_), Repr::Cyc(_)) => Ordering::Greater,
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Cyc(c) => c.iter().all(|x| x.is_zero()),
            Repr::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Cyc(c) => c[0].is_one() && c[1..].iter().all(|x| x.is_zero()),
            Repr::Mod(v) => *v == 1,
        }
    }

    /// Power-basis coefficients (length = field degree).  For GF(p) the single residue.
    pub fn coefficients(&self) -> Vec<BigRational> {
        match &self.repr {
            Repr::Cyc(c) => c.clone(),
            Repr::Mod(v) => vec![BigRational::from_integer(BigInt::from(*v))],
        }
    }

    /// The residue for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(v) => Some(*v),
            Repr::Cyc(_) => None,
        }
    }

    /// Returns the element as a rational number when it lies in the prime field ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Cyc(c) if c[1..].iter().all(|x| x.is_zero()) => Some(c[0].clone()),
            _ => None,
        }
    }

    fn check(&self, other: &FieldElement) {
        debug_assert!(self.field == other.field, "mixing elements of {} and {}", self.field, other.field);
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr {
            Repr::Mod(v) => {
                let p = self.field.characteristic();
                Ok(FieldElement { field: self.field.clone(), repr: Repr::Mod(inv_mod(*v, p)) })
            }
            Repr::Cyc(c) => {
                if c[1..].iter().all(|x| x.is_zero()) {
                    let mut out = vec![BigRational::zero(); c.len()];
                    out[0] = c[0].recip();
                    return Ok(FieldElement { field: self.field.clone(), repr: Repr::Cyc(out) });
                }
                // Solve (multiplication by self) · x = 1 over ℚ.
                let d = c.len();
                let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
                for j in 0..d {
                    let mut basis = vec![BigRational::zero(); d];
                    basis[j] = BigRational::one();
                    let prod = self * &FieldElement { field: self.field.clone(), repr: Repr::Cyc(basis) };
                    cols.push(prod.coefficients());
                }
                let mut rhs = vec![BigRational::zero(); d];
                rhs[0] = BigRational::one();
                let x = solve_square_rational(cols, rhs).ok_or(Error::DivisionByZero)?;
                Ok(FieldElement { field: self.field.clone(), repr: Repr::Cyc(x) })
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Gaussian elimination for a nonsingular square rational system given by columns.
fn solve_square_rational(cols: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n).map(|j| cols[j][i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Cyc(a), Repr::Cyc(b)) => Repr::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Repr::Mod(a), Repr::Mod(b)) => Repr::Mod((a + b) % self.field.characteristic()),
            _ => panic!("mixed field representations"),
        };
        FieldElement { field: self.field.clone(), repr }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Cyc(a), Repr::Cyc(b)) => Repr::Cyc(a.iter().zip(b).map(|(x, y)| x - y).collect()),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod((a + p - b) % p)
            }
            _ => panic!("mixed field representations"),
        };
        FieldElement { field: self.field.clone(), repr }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        match (&self.repr, &rhs.repr) {
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let nz_a: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
                let nz_b: Vec<usize> = (0..b.len()).filter(|&i| !b[i].is_zero()).collect();
                if nz_a.is_empty() || nz_b.is_empty() {
                    return self.field.zero();
                }
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for &i in &nz_a {
                    for &j in &nz_b {
                        prod[i + j] += &a[i] * &b[j];
                    }
                }
                self.field.from_poly(prod)
            }
            (Repr::Mod(a), Repr::Mod(b)) => FieldElement {
                field: self.field.clone(),
                repr: Repr::Mod(mul_mod(*a, *b, self.field.characteristic())),
            },
            _ => panic!("mixed field representations"),
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = Result<FieldElement>;
    fn div(self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        &self.field.zero() - self
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $out:ty) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = $out;
            fn $m(self, rhs: FieldElement) -> $out {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = $out;
            fn $m(self, rhs: &FieldElement) -> $out {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add, FieldElement);
forward_owned!(Sub, sub, FieldElement);
forward_owned!(Mul, mul, FieldElement);
forward_owned!(Div, div, Result<FieldElement>);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints in the scalar literal grammar, highest power of `z` first, e.g. `1/2*z^3 - 2`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Mod(v) => write!(f, "{v}"),
            Repr::Cyc(c) => {
                let mut first = true;
                for (k, q) in c.iter().enumerate().rev() {
                    if q.is_zero() {
                        continue;
                    }
                    let neg = q.is_negative();
                    let a = q.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if neg { '-' } else { '+' })?;
                    }
                    first = false;
                    match k {
                        0 => write!(f, "{a}")?,
                        _ => {
                            if !a.is_one() {
                                write!(f, "{a}*")?;
                            }
                            if k == 1 {
                                write!(f, "z")?;
                            } else {
                                write!(f, "z^{k}")?;
                            }
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}
