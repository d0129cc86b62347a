//! Dirichlet characters of odd modulus, the generalized q-Euler numbers
//! `E_{n,chi,q}` attached to them, and the q-L-function
//! `l_{E,q}(s, chi) = sum_{n>=1} (-1)^n chi(n) / [n]_q^s`.
//!
//! Character values are stored as exponents `e` of `exp(2 pi i e / m)` and
//! only turned into [`ComplexP`] at the last step.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exactnum::{ComplexP, Rational, RealP};
use crate::qeuler::{q_euler_poly, q_int, QBase, QPower};
use crate::qzeta::{partial_zeta, partial_zeta_unchecked};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirichletCharacter {
    modulus: u64,
    order: u64,
    /// `None` where `gcd(a, modulus) > 1`.
    exponents: Vec<Option<u64>>,
}

impl DirichletCharacter {
    /// Builds a character from raw exponents over a common denominator,
    /// reducing to the exact order.
    fn from_exponents(modulus: u64, denom: u64, raw: Vec<Option<u64>>) -> Self {
        let g = raw.iter().flatten().fold(denom, |g, &e| g.gcd(&e));
        let exponents = raw.into_iter().map(|e| e.map(|e| (e / g) % (denom / g))).collect();
        Self { modulus, order: denom / g, exponents }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &[Option<u64>] {
        &self.exponents
    }

    /// Exponent `e` with `chi(a) = exp(2 pi i e / order)`, or `None` if `chi(a) = 0`.
    pub fn exponent(&self, a: i64) -> Option<u64> {
        self.exponents[a.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Real-valued (order at most 2).
    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    pub fn value(&self, a: i64, precision: u32) -> ComplexP {
        match self.exponent(a) {
            Some(e) => ComplexP::root_of_unity(e, self.order, precision),
            None => ComplexP::zero(precision),
        }
    }

    /// Exact value for real characters: `0`, `1` or `-1`.
    pub fn real_value(&self, a: i64) -> Option<Rational> {
        if !self.is_real() {
            return None;
        }
        Some(match self.exponent(a) {
            None => Rational::zero(),
            Some(0) => Rational::one(),
            Some(_) => -Rational::one(),
        })
    }

    /// Pointwise product (same modulus).
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "characters of different moduli");
        let l = self.order.lcm(&other.order);
        let (ka, kb) = (l / self.order, l / other.order);
        let raw = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some((a * ka + b * kb) % l),
                _ => None,
            })
            .collect();
        Self::from_exponents(self.modulus, l, raw)
    }

    /// `e(ab) = e(a) + e(b) mod order` for all units `a, b`.
    pub fn is_multiplicative(&self) -> bool {
        let d = self.modulus;
        (0..d).all(|a| {
            (0..d).all(|b| match (self.exponents[a as usize], self.exponents[b as usize]) {
                (Some(ea), Some(eb)) => self.exponents[((a * b) % d) as usize] == Some((ea + eb) % self.order),
                (None, _) | (_, None) => self.exponents[((a * b) % d) as usize].is_none(),
            })
        })
    }

    /// Whether `sum_{a unit} chi(a) = 0` holds, checked as equal
    /// multiplicities of every order-th root of unity.
    pub fn sums_to_zero(&self) -> bool {
        if self.is_principal() {
            return false;
        }
        let mut hits = vec![0u64; self.order as usize];
        for e in self.exponents.iter().flatten() {
            hits[*e as usize] += 1;
        }
        hits.iter().all(|&h| h == hits[0])
    }
}

/// All characters modulo an odd `d`, in a fixed order: lexicographic in the
/// exponent choices for each prime-power factor (primes ascending), so
/// index 0 is the principal character.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterGroup {
    modulus: u64,
    characters: Vec<DirichletCharacter>,
}

impl CharacterGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&DirichletCharacter> {
        self.characters.get(index)
    }

    pub fn characters(&self) -> &[DirichletCharacter] {
        &self.characters
    }

    pub fn principal(&self) -> &DirichletCharacter {
        &self.characters[0]
    }

    pub fn contains(&self, chi: &DirichletCharacter) -> bool {
        self.characters.contains(chi)
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest primitive root modulo an odd prime power.
fn primitive_root(pk: u64, phi: u64) -> u64 {
    let prime_factors: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..pk)
        .find(|&g| g.gcd(&pk) == 1 && prime_factors.iter().all(|&r| mod_pow(g, phi / r, pk) != 1))
        .expect("odd prime powers have primitive roots")
}

/// A cyclic factor `(Z/p^k)^*` with its discrete-log table.
struct CyclicFactor {
    modulus: u64,
    phi: u64,
    log: Vec<Option<u64>>,
}

impl CyclicFactor {
    fn new(p: u64, k: u32) -> Self {
        let modulus = p.pow(k);
        let phi = modulus / p * (p - 1);
        let g = primitive_root(modulus, phi);
        let mut log = vec![None; modulus as usize];
        let mut x = 1u64;
        for i in 0..phi {
            log[x as usize] = Some(i);
            x = x * g % modulus;
        }
        Self { modulus, phi, log }
    }
}

/// The full character group modulo an odd `d >= 1`.
pub fn characters_mod(d: u64) -> Result<CharacterGroup> {
    if d == 0 || d.is_multiple_of(2) {
        return domain(format!("modulus must be odd and positive, got {d}"));
    }
    let factors: Vec<CyclicFactor> = factorize(d).into_iter().map(|(p, k)| CyclicFactor::new(p, k)).collect();
    let denom = factors.iter().fold(1u64, |l, f| l.lcm(&f.phi));
    let total: u64 = factors.iter().map(|f| f.phi).product();

    let mut characters = Vec::with_capacity(total as usize);
    for index in 0..total {
        // Mixed-radix digits, first factor most significant.
        let mut rest = index;
        let mut choice = vec![0u64; factors.len()];
        for (slot, f) in choice.iter_mut().zip(&factors).rev() {
            *slot = rest % f.phi;
            rest /= f.phi;
        }
        let raw = (0..d)
            .map(|a| {
                factors.iter().zip(&choice).try_fold(0u64, |acc, (f, &c)| {
                    let ind = f.log[(a % f.modulus) as usize]?;
                    Some((acc + c * ind % f.phi * (denom / f.phi)) % denom)
                })
            })
            .collect();
        characters.push(DirichletCharacter::from_exponents(d, denom, raw));
    }
    Ok(CharacterGroup { modulus: d, characters })
}

/// An exact element `sum_e coeffs[e] exp(2 pi i e / order)` of a cyclotomic
/// field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicValue {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicValue {
    fn zero(order: u64) -> Self {
        Self { order, coeffs: vec![Rational::zero(); order as usize] }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn add_at(&mut self, e: u64, v: &Rational) {
        self.coeffs[e as usize] += v;
    }

    /// The rational value when `order <= 2`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.order {
            1 => Some(self.coeffs[0].clone()),
            2 => Some(&self.coeffs[0] - &self.coeffs[1]),
            _ => None,
        }
    }

    pub fn to_complex(&self, precision: u32) -> ComplexP {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(
            ComplexP::zero(precision),
            |acc, (e, c)| {
                let w = ComplexP::root_of_unity(e as u64, self.order, precision);
                &acc + &w.scale(&RealP::from_rational(c, precision))
            },
        )
    }

    pub fn halved(&self) -> Self {
        let two = Rational::integer(2);
        Self { order: self.order, coeffs: self.coeffs.iter().map(|c| c / &two).collect() }
    }
}

/// `E_{n,chi,q} = [d]_q^n sum_{a=0}^{d-1} chi(a) (-1)^a E_{n,q^d}(a/d)`, exact.
pub fn generalized_q_euler(n: u32, chi: &DirichletCharacter, q: &QBase) -> Result<CyclotomicValue> {
    let d = chi.modulus();
    let qd = q.raised(d as u32);
    let mut value = CyclotomicValue::zero(chi.order());
    for a in 0..d {
        let Some(e) = chi.exponent(a as i64) else { continue };
        let qp = QPower::at(&qd, &Rational::new(a, d)?)?;
        let term = Rational::sign_pow(a as i64) * q_euler_poly(n, &qp);
        value.add_at(e, &term);
    }
    let scale = q_int(d, q).pow(n as i64)?;
    value.coeffs.iter_mut().for_each(|c| *c *= &scale);
    Ok(value)
}

/// `l_{E,q}(s, chi) = sum_{a=1}^{d} chi(a) H_q(s, a; d)`.
pub fn l_function(s: &RealP, chi: &DirichletCharacter, q: &QBase, precision: u32) -> Result<ComplexP> {
    if !q.is_zeta_domain() {
        return domain("the q-L-function needs a base with 0 < q < 1");
    }
    let d = chi.modulus();
    let mut acc = ComplexP::zero(precision);
    for a in 1..=d {
        if chi.exponent(a as i64).is_none() {
            continue;
        }
        let h = if a < d {
            partial_zeta(s, a, d, q, precision)?
        } else {
            // Only reachable for d = 1, where the single class is a = F = 1.
            partial_zeta_unchecked(s, a, d, q, precision)?
        };
        acc = &acc + &chi.value(a as i64, precision).scale(&h);
    }
    Ok(acc)
}

/// `l_{E,q}(-n, chi)` exactly, summing the exact partial-zeta special values
/// `(-1)^a [d]_q^n E_{n,q^d}(a/d) / 2`.
pub fn l_function_special_value(n: u32, chi: &DirichletCharacter, q: &QBase) -> Result<CyclotomicValue> {
    if !q.is_zeta_domain() {
        return domain("the q-L-function needs a base with 0 < q < 1");
    }
    let d = chi.modulus();
    let qd = q.raised(d as u32);
    let scale = q_int(d, q).pow(n as i64)? / Rational::integer(2);
    let mut value = CyclotomicValue::zero(chi.order());
    for a in 1..=d {
        let Some(e) = chi.exponent(a as i64) else { continue };
        let qp = QPower::from_value(&qd, q.pow(a as i64))?;
        let h = Rational::sign_pow(a as i64) * &scale * q_euler_poly(n, &qp);
        value.add_at(e, &h);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn group_sizes() {
        for (d, phi) in [(1, 1), (3, 2), (5, 4), (9, 6), (15, 8), (21, 12), (25, 20), (45, 24)] {
            let g = characters_mod(d).unwrap();
            assert_eq!(g.len(), phi, "d={d}");
            assert!(g.principal().is_principal());
            assert_eq!(g.characters().iter().filter(|c| c.is_principal()).count(), 1);
        }
        assert!(characters_mod(4).is_err());
        assert!(characters_mod(0).is_err());
    }

    #[test]
    fn mod_three_layout() {
        let g = characters_mod(3).unwrap();
        let chi = g.get(1).unwrap();
        assert_eq!(chi.order(), 2);
        assert_eq!(chi.real_value(0), Some(r(0, 1)));
        assert_eq!(chi.real_value(1), Some(r(1, 1)));
        assert_eq!(chi.real_value(2), Some(r(-1, 1)));
    }

    #[test]
    fn group_structure() {
        for d in [3, 5, 7, 9, 15, 21] {
            let g = characters_mod(d).unwrap();
            for chi in g.characters() {
                assert!(chi.is_multiplicative(), "d={d}");
                assert_eq!(chi.exponent(1), Some(0));
                assert!(chi.is_principal() || chi.sums_to_zero());
                for psi in g.characters() {
                    assert!(g.contains(&chi.product(psi)));
                }
            }
            // Distinct characters.
            for (i, a) in g.characters().iter().enumerate() {
                for b in &g.characters()[i + 1..] {
                    assert_ne!(a, b);
                }
            }
        }
    }

    #[test]
    fn generalized_numbers() {
        let q = QBase::zeta(r(1, 2)).unwrap();
        let g3 = characters_mod(3).unwrap();
        let chi = g3.get(1).unwrap();
        assert_eq!(generalized_q_euler(0, chi, &q).unwrap().as_rational(), Some(r(-2, 1)));
        assert_eq!(generalized_q_euler(1, chi, &q).unwrap().as_rational(), Some(r(-4, 3)));
        let trivial = characters_mod(1).unwrap();
        for n in 0..5 {
            let v = generalized_q_euler(n, trivial.principal(), &q).unwrap();
            assert_eq!(v.as_rational(), Some(crate::qeuler::q_euler_number(n, &q)));
        }
    }

    #[test]
    fn l_function_anchor() {
        let p = 50;
        let q = QBase::zeta(r(1, 2)).unwrap();
        let chi = characters_mod(3).unwrap().get(1).unwrap().clone();
        let v = l_function(&RealP::from_i64(-1, p), &chi, &q, p).unwrap();
        let expect = RealP::from_rational(&r(-2, 3), p);
        assert!((&v.re - &expect).abs() <= RealP::tolerance(p));
        assert!(v.im.abs() <= RealP::tolerance(p));
        let v0 = l_function(&RealP::zero(p), &chi, &q, p).unwrap();
        assert!((&v0.re - &RealP::from_i64(-1, p)).abs() <= RealP::tolerance(p));
        assert_eq!(l_function_special_value(1, &chi, &q).unwrap().as_rational(), Some(r(-2, 3)));
    }

    #[test]
    fn modulus_one_l_function_matches_for_positive_n() {
        let p = 40;
        let q = QBase::zeta(r(1, 3)).unwrap();
        let chi = characters_mod(1).unwrap().principal().clone();
        for n in 1..4u32 {
            let exact = generalized_q_euler(n, &chi, &q).unwrap().halved().as_rational().unwrap();
            let special = l_function_special_value(n, &chi, &q).unwrap().as_rational().unwrap();
            assert_eq!(exact, special);
            let v = l_function(&RealP::from_i64(-(n as i64), p), &chi, &q, p).unwrap();
            assert!((&v.re - &RealP::from_rational(&exact, p)).abs() <= RealP::tolerance(p));
        }
    }
}
