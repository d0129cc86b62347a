//! Classical (q = 1) Euler and Bernoulli numbers, Euler polynomials, and
//! the plain and alternating power sums they close.
//!
//! These are the limits every q-analogue is checked against.

use std::sync::RwLock;

use crate::exactnum::{binom, Rational};

/// A memoized sequence built by a recurrence that needs all earlier terms.
struct Table {
    values: RwLock<Vec<Rational>>,
    next: fn(&[Rational]) -> Rational,
}

impl Table {
    const fn new(next: fn(&[Rational]) -> Rational) -> Self {
        Self { values: RwLock::new(Vec::new()), next }
    }

    fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.values.read().expect("table poisoned").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("table poisoned");
        while values.len() <= n {
            let v = (self.next)(&values);
            values.push(v);
        }
        values[n].clone()
    }

    fn prefix(&self, n: usize) -> Vec<Rational> {
        self.get(n);
        self.values.read().expect("table poisoned")[..=n].to_vec()
    }
}

// E_0 = 1 and sum_{k<=n} C(n,k) E_k + E_n = 0, i.e. 2/(e^t + 1).
fn next_euler(prev: &[Rational]) -> Rational {
    let n = prev.len() as u64;
    if n == 0 {
        return Rational::one();
    }
    let s: Rational = prev.iter().enumerate().map(|(k, e)| binom(n, k as u64) * e).sum();
    -s / Rational::integer(2)
}

// B_0 = 1 and sum_{k<=n} C(n+1,k) B_k = 0, giving B_1 = -1/2.
fn next_bernoulli(prev: &[Rational]) -> Rational {
    let n = prev.len() as u64;
    if n == 0 {
        return Rational::one();
    }
    let s: Rational = prev.iter().enumerate().map(|(k, b)| binom(n + 1, k as u64) * b).sum();
    -s / Rational::integer(n as i64 + 1)
}

static EULER: Table = Table::new(next_euler);
static BERNOULLI: Table = Table::new(next_bernoulli);

/// Euler number `E_n` from `2/(e^t + 1) = sum E_n t^n/n!`.
pub fn euler_number(n: usize) -> Rational {
    EULER.get(n)
}

/// `E_0..=E_n`.
pub fn euler_numbers(n: usize) -> Vec<Rational> {
    EULER.prefix(n)
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    BERNOULLI.get(n)
}

pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    BERNOULLI.prefix(n)
}

/// Euler polynomial `E_n(x) = sum_k C(n,k) E_k x^(n-k)`.
pub fn euler_poly(n: usize, x: &Rational) -> Rational {
    let e = euler_numbers(n);
    // Horner-free but exact; n is small.
    let mut xp = Rational::one();
    let mut acc = Rational::zero();
    for k in (0..=n).rev() {
        acc += binom(n as u64, k as u64) * &e[k] * &xp;
        xp *= x;
    }
    acc
}

/// `sum_{l=0}^{k-1} l^n` by direct summation.
pub fn power_sum(n: u32, k: u64) -> Rational {
    (0..k).map(|l| Rational::integer(l).pow(n as i64).expect("nonnegative exponent")).sum()
}

/// `(1/(n+1)) sum_{i=0}^{n} C(n+1,i) B_i k^(n+1-i)`.
pub fn power_sum_closed(n: u32, k: u64) -> Rational {
    let b = bernoulli_numbers(n as usize);
    let k = Rational::integer(k);
    let s: Rational = (0..=n)
        .map(|i| {
            binom(n as u64 + 1, i as u64)
                * &b[i as usize]
                * k.pow((n + 1 - i) as i64).expect("nonnegative exponent")
        })
        .sum();
    s / Rational::integer(n as i64 + 1)
}

/// `sum_{l=0}^{k-1} (-1)^l l^m` by direct summation.
pub fn alt_power_sum(m: u32, k: u64) -> Rational {
    (0..k)
        .map(|l| Rational::sign_pow(l as i64) * Rational::integer(l).pow(m as i64).expect("nonnegative exponent"))
        .sum()
}

/// `(E_m + (-1)^(k+1) E_m(k)) / 2`.
///
/// The alternating sign follows the number of terms `k`, not the power `m`.
pub fn alt_power_sum_closed(m: u32, k: u64) -> Rational {
    let em = euler_number(m as usize);
    let emk = euler_poly(m as usize, &Rational::integer(k));
    (em + Rational::sign_pow(k as i64 + 1) * emk) / Rational::integer(2)
}
