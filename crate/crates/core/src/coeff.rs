//! Exact coefficients `c₀ + c_J·J + c_{J/D}·(J/D) + c_w·w` with rational parts.
//!
//! `D` stays symbolic: the two coupling terms are kept apart and only
//! combined when a numeric dimension is supplied.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coeff {
    pub c0: Rational64,
    pub j: Rational64,
    pub j_over_d: Rational64,
    pub w: Rational64,
}

fn r(x: i64) -> Rational64 {
    Rational64::from_integer(x)
}

impl Coeff {
    pub const ZERO: Coeff = Coeff {
        c0: Rational64::new_raw(0, 1),
        j: Rational64::new_raw(0, 1),
        j_over_d: Rational64::new_raw(0, 1),
        w: Rational64::new_raw(0, 1),
    };

    pub fn constant(c: i64) -> Self {
        Self { c0: r(c), ..Self::ZERO }
    }

    pub fn j(c: i64) -> Self {
        Self { j: r(c), ..Self::ZERO }
    }

    pub fn j_over_d(c: i64) -> Self {
        Self {
            j_over_d: r(c),
            ..Self::ZERO
        }
    }

    pub fn w(c: i64) -> Self {
        Self { w: r(c), ..Self::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.j.is_zero() && self.j_over_d.is_zero() && self.w.is_zero()
    }

    /// Substitutes `w = -nJ` (the spectral part `-i𝖤` is factored out).
    pub fn without_spectral(&self, n: usize) -> Coeff {
        Coeff {
            j: self.j - self.w * r(n as i64),
            w: Rational64::zero(),
            ..*self
        }
    }

    /// Numeric value at the given `w`, `J` and `D`.
    pub fn eval(&self, w: Complex64, j: f64, d: f64) -> Complex64 {
        let f = |x: Rational64| x.to_f64().expect("finite rational");
        w * f(self.w) + f(self.c0) + f(self.j) * j + f(self.j_over_d) * j / d
    }

    /// Numeric value with `w` absent (for `M_J`).
    pub fn eval_real(&self, j: f64, d: f64) -> f64 {
        self.eval(Complex64::zero(), j, d).re
    }

    /// Value of the `J`-proportional part at integer `D`, times `D`; exact.
    /// That is `c_J·D + c_{J/D}`, the integer weight of the coupling terms.
    pub fn coupling_times_d(&self, d: i64) -> Rational64 {
        self.j * r(d) + self.j_over_d
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, o: Coeff) -> Coeff {
        Coeff {
            c0: self.c0 + o.c0,
            j: self.j + o.j,
            j_over_d: self.j_over_d + o.j_over_d,
            w: self.w + o.w,
        }
    }
}

impl AddAssign for Coeff {
    fn add_assign(&mut self, o: Coeff) {
        *self = *self + o;
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            c0: -self.c0,
            j: -self.j,
            j_over_d: -self.j_over_d,
            w: -self.w,
        }
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, o: Coeff) -> Coeff {
        self + (-o)
    }
}

impl Mul<Rational64> for Coeff {
    type Output = Coeff;
    fn mul(self, s: Rational64) -> Coeff {
        Coeff {
            c0: self.c0 * s,
            j: self.j * s,
            j_over_d: self.j_over_d * s,
            w: self.w * s,
        }
    }
}

impl fmt::Display for Coeff {
    /// Renders like `2J+w`, `-J/D`, `(3/2)J`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut term = |c: Rational64, sym: &str| {
            if c.is_zero() {
                return;
            }
            let neg = c < Rational64::zero();
            let a = if neg { -c } else { c };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("({a})")
            };
            match (sym, a == Rational64::from_integer(1)) {
                ("", _) => out += &mag,
                (_, true) => out += sym,
                (_, false) => out += &format!("{mag}{sym}"),
            }
        };
        term(self.c0, "");
        term(self.j, "J");
        term(self.j_over_d, "J/D");
        term(self.w, "w");
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
