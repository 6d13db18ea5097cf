//! Arithmetic in GF(p^k).
//!
//! Elements are stored packed: the coefficient vector `c_0 + c_1 x + ... +
//! c_{k-1} x^{k-1}` over `Z_p` is encoded as the integer `sum c_i p^i`. With
//! that encoding the integer order coincides with lexicographic order of the
//! coefficients read from the highest degree down, which is the order used to
//! pick both the modulus and the primitive element.
//!
//! A [`FieldContext`] is built once per order and carries exp/log tables for a
//! fixed primitive element `xi`; every multiplicative operation goes through
//! those tables.

use std::fmt;

use thiserror::Error;

/// Largest field order for which a context will be built.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of {MAX_FIELD_ORDER}")]
    OrderTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no discrete logarithm")]
    LogOfZero,
    #[error("{value} is not an element of GF({order})")]
    NotAnElement { value: u32, order: u32 },
}

/// A prime power `q = p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    p: u32,
    k: u32,
    q: u32,
}

impl PrimePower {
    /// Classifies `n`, rejecting anything that is not a prime power.
    pub fn new(n: u64) -> Result<Self, FieldError> {
        classify_prime_power(n)?.ok_or(FieldError::NotPrimePower(n))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_prime(&self) -> bool {
        self.k == 1
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Returns `Some((p, k))` when `n = p^k` for a prime `p`, `None` otherwise.
///
/// Orders that do not fit in a `u32` are reported as not being prime powers
/// only if they genuinely are not; oversized prime powers are rejected with
/// [`FieldError::OrderTooLarge`].
pub fn classify_prime_power(n: u64) -> Result<Option<PrimePower>, FieldError> {
    if n < 2 {
        return Err(FieldError::OrderTooSmall(n));
    }
    let p = smallest_prime_factor(n);
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Ok(None);
    }
    let q = u32::try_from(n).map_err(|_| FieldError::OrderTooLarge(n))?;
    Ok(Some(PrimePower { p: p as u32, k, q }))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

/// A polynomial over `Z_p`, coefficients stored lowest degree first with no
/// trailing zeros (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    p: u32,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(p: u32, coeffs: impl Into<Vec<u32>>) -> Self {
        let mut coeffs: Vec<u32> = coeffs.into();
        for c in &mut coeffs {
            *c %= p;
        }
        let mut poly = Self { p, coeffs };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Remainder of `self` modulo a monic `divisor`.
    pub fn rem_monic(&self, divisor: &Polynomial) -> Polynomial {
        debug_assert!(divisor.is_monic());
        let p = u64::from(self.p);
        let d = divisor.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let lead = u64::from(*r.last().unwrap());
            let shift = r.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = lead * u64::from(c) % p;
                    r[shift + i] = ((u64::from(r[shift + i]) + p - sub) % p) as u32;
                }
            }
            r.pop();
        }
        Polynomial::new(self.p, r)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(self.p, Vec::new());
        }
        let p = u64::from(self.p);
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + u64::from(a) * u64::from(b)) % p;
            }
        }
        Polynomial::new(
            self.p,
            out.into_iter().map(|c| c as u32).collect::<Vec<_>>(),
        )
    }

    /// Exhaustive irreducibility test: no monic divisor of degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            for tail in 0..u64::from(self.p).pow(d as u32) {
                let divisor = monic_from_tail(self.p, d as u32, tail);
                if self.rem_monic(&divisor).coeffs.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, c) => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// The monic polynomial `x^k + tail`, where `tail` is a packed coefficient
/// vector of length `k`.
fn monic_from_tail(p: u32, k: u32, tail: u64) -> Polynomial {
    let mut coeffs = unpack(p, k, tail);
    coeffs.push(1);
    Polynomial::new(p, coeffs)
}

fn unpack(p: u32, k: u32, mut packed: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push((packed % u64::from(p)) as u32);
        packed /= u64::from(p);
    }
    out
}

/// Lexicographically smallest monic irreducible polynomial of degree `k`
/// over `Z_p`, coefficients compared from the highest degree down.
pub fn find_irreducible(p: u32, k: u32) -> Polynomial {
    assert!(k >= 1, "degree must be positive");
    (0..u64::from(p).pow(k))
        .map(|tail| monic_from_tail(p, k, tail))
        .find(Polynomial::is_irreducible)
        .expect("an irreducible polynomial exists in every degree")
}

/// A packed field element; meaningful only together with its [`FieldContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An exponent of the primitive element, always reduced into `[0, q-2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(pub u32);

/// GF(q) with a fixed modulus, primitive element and exp/log tables.
#[derive(Debug, Clone)]
pub struct FieldContext {
    order: PrimePower,
    modulus: Polynomial,
    xi: FieldElement,
    exp: Vec<FieldElement>,
    // Indexed by packed element; slot 0 is unused.
    log: Vec<u32>,
}

impl FieldContext {
    pub fn new(order: PrimePower) -> Result<Self, FieldError> {
        if u64::from(order.q) > MAX_FIELD_ORDER {
            return Err(FieldError::OrderTooLarge(order.q.into()));
        }
        let modulus = find_irreducible(order.p, order.k);
        let xi = find_primitive_element(order, &modulus);

        let group = (order.q - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![u32::MAX; order.q as usize];
        let mut acc = FieldElement::ONE;
        for i in 0..group {
            assert_eq!(
                log[acc.0 as usize],
                u32::MAX,
                "primitive element repeats before exhausting the group"
            );
            log[acc.0 as usize] = i as u32;
            exp.push(acc);
            acc = poly_mul(order, &modulus, acc, xi);
        }
        assert_eq!(acc, FieldElement::ONE, "xi^(q-1) must equal 1");

        Ok(Self {
            order,
            modulus,
            xi,
            exp,
            log,
        })
    }

    /// Convenience: classify `n` and build its field.
    pub fn for_order(n: u64) -> Result<Self, FieldError> {
        Self::new(PrimePower::new(n)?)
    }

    pub fn order(&self) -> PrimePower {
        self.order
    }

    pub fn q(&self) -> u32 {
        self.order.q
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn xi(&self) -> FieldElement {
        self.xi
    }

    /// All `q` elements in packed order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order.q).map(FieldElement)
    }

    /// Nonzero elements in exponent order: `xi^0, xi^1, ..., xi^(q-2)`.
    pub fn nonzero_by_exponent(&self) -> &[FieldElement] {
        &self.exp
    }

    pub fn element(&self, packed: u32) -> Result<FieldElement, FieldError> {
        if packed < self.order.q {
            Ok(FieldElement(packed))
        } else {
            Err(FieldError::NotAnElement {
                value: packed,
                order: self.order.q,
            })
        }
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        let p = self.order.p;
        let mut packed = 0u32;
        for &c in coeffs.iter().rev() {
            packed = packed * p + c % p;
        }
        self.element(packed)
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        unpack(self.order.p, self.order.k, a.0.into())
    }

    /// The element as a polynomial in the class `x` of the modulus' root.
    pub fn as_polynomial(&self, a: FieldElement) -> Polynomial {
        Polynomial::new(self.order.p, self.coefficients(a))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.digitwise(a, b, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.digitwise(a, b, |x, y, p| (x + p - y) % p)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, a)
    }

    fn digitwise(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: impl Fn(u32, u32, u32) -> u32,
    ) -> FieldElement {
        let p = self.order.p;
        let (mut a, mut b) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.order.k {
            out += op(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let e = (self.log[a.0 as usize] + self.log[b.0 as usize]) % self.group_order();
        self.exp[e as usize]
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.group_order();
        Ok(self.exp[((n - self.log[a.0 as usize]) % n) as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer `e`; negative powers of zero are an error and
    /// `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        let n = i64::from(self.group_order());
        let e = (i64::from(self.log[a.0 as usize]) * e.rem_euclid(n)).rem_euclid(n);
        Ok(self.exp[e as usize])
    }

    /// `xi^e` with `e` reduced modulo `q - 1`.
    pub fn xi_pow(&self, e: i64) -> FieldElement {
        self.exp[e.rem_euclid(i64::from(self.group_order())) as usize]
    }

    pub fn exp(&self, e: Exponent) -> FieldElement {
        self.exp[(e.0 % self.group_order()) as usize]
    }

    pub fn log(&self, a: FieldElement) -> Result<Exponent, FieldError> {
        if a.is_zero() {
            return Err(FieldError::LogOfZero);
        }
        Ok(Exponent(self.log[a.0 as usize]))
    }

    /// Size of the multiplicative group, `q - 1`.
    pub fn group_order(&self) -> u32 {
        self.order.q - 1
    }

    /// Multiplicative order of a nonzero element, from its discrete log.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u32, FieldError> {
        let e = self.log(a)?.0;
        let n = self.group_order();
        Ok(n / gcd(n, e))
    }

    /// Human-readable element: integers for prime fields; `0`, `1`, `x`,
    /// `x^e` (powers of the primitive element) otherwise.
    pub fn render(&self, a: FieldElement) -> String {
        if self.order.is_prime() {
            return a.0.to_string();
        }
        match self.log(a) {
            Err(_) => "0".to_string(),
            Ok(e) => render_power(e),
        }
    }

    /// Renders `xi^e` in the same notation as [`FieldContext::render`].
    pub fn render_exponent(&self, e: Exponent) -> String {
        if self.order.is_prime() {
            self.exp(e).0.to_string()
        } else {
            render_power(e)
        }
    }
}

fn render_power(e: Exponent) -> String {
    match e.0 {
        0 => "1".to_string(),
        1 => "x".to_string(),
        n => format!("x^{n}"),
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplication by polynomial arithmetic, independent of the log tables.
fn poly_mul(
    order: PrimePower,
    modulus: &Polynomial,
    a: FieldElement,
    b: FieldElement,
) -> FieldElement {
    let pa = Polynomial::new(order.p, unpack(order.p, order.k, a.0.into()));
    let pb = Polynomial::new(order.p, unpack(order.p, order.k, b.0.into()));
    let r = pa.mul(&pb).rem_monic(modulus);
    let mut packed = 0u32;
    for &c in r.coeffs.iter().rev() {
        packed = packed * order.p + c;
    }
    FieldElement(packed)
}

fn poly_pow(order: PrimePower, modulus: &Polynomial, a: FieldElement, mut e: u64) -> FieldElement {
    let mut base = a;
    let mut acc = FieldElement::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(order, modulus, acc, base);
        }
        base = poly_mul(order, modulus, base, base);
        e >>= 1;
    }
    acc
}

/// Smallest nonzero element (packed order) whose multiplicative order is
/// exactly `q - 1`.
pub fn find_primitive_element(order: PrimePower, modulus: &Polynomial) -> FieldElement {
    let n = u64::from(order.q - 1);
    let factors = distinct_prime_factors(n);
    (1..order.q)
        .map(FieldElement)
        .find(|&a| {
            poly_pow(order, modulus, a, n) == FieldElement::ONE
                && factors
                    .iter()
                    .all(|&r| poly_pow(order, modulus, a, n / r) != FieldElement::ONE)
        })
        .expect("the multiplicative group of a finite field is cyclic")
}
