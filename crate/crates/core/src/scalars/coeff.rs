use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = num_rational::BigRational;

/// Element of the field Q(i, √2), stored as `(a + b i) + (c + d i) √2`.
///
/// Every scalar coefficient in the crate lives here, and the same type is used
/// as the target of numeric evaluation, so it has to be a field: inversion goes
/// through the √2 conjugate and then the complex conjugate.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    a: Q,
    b: Q,
    c: Q,
    d: Q,
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

impl Coefficient {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Self {
        Coefficient { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(q(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Q::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: Q) -> Self {
        Coefficient {
            a: r,
            ..Self::default()
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Coefficient {
            b: Q::one(),
            ..Self::default()
        }
    }

    pub fn sqrt2() -> Self {
        Coefficient {
            c: Q::one(),
            ..Self::default()
        }
    }

    /// `1/√2`.
    pub fn inv_sqrt2() -> Self {
        Coefficient {
            c: Q::new(BigInt::from(1), BigInt::from(2)),
            ..Self::default()
        }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn parts(&self) -> (&Q, &Q, &Q, &Q) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the value is a plain rational.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, r: &Q) -> Self {
        Coefficient {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// Conjugate under √2 ↦ -√2.
    fn sqrt2_conj(&self) -> Self {
        Coefficient {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x * conj(x) lies in Q(i); then invert the Gaussian rational.
        let conj = self.sqrt2_conj();
        let norm = self * &conj;
        debug_assert!(norm.c.is_zero() && norm.d.is_zero());
        let den = &norm.a * &norm.a + &norm.b * &norm.b;
        let inv_norm = Coefficient {
            a: &norm.a / &den,
            b: -&norm.b / &den,
            ..Self::default()
        };
        Some(&conj * &inv_norm)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power allowing negative exponents; `None` if inverting zero.
    pub fn powi(&self, k: i32) -> Option<Self> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            self.inv().map(|x| x.pow(k.unsigned_abs()))
        }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, o: &Coefficient) -> Coefficient {
        Coefficient {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, o: &Coefficient) -> Coefficient {
        Coefficient {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, o: &Coefficient) -> Coefficient {
        // (x + y√2)(u + w√2) = (xu + 2yw) + (xw + yu)√2 with x,y,u,w Gaussian.
        let (x_re, x_im, y_re, y_im) = (&self.a, &self.b, &self.c, &self.d);
        let (u_re, u_im, w_re, w_im) = (&o.a, &o.b, &o.c, &o.d);
        let cmul = |p_re: &Q, p_im: &Q, r_re: &Q, r_im: &Q| (p_re * r_re - p_im * r_im, p_re * r_im + p_im * r_re);
        let (xu_re, xu_im) = cmul(x_re, x_im, u_re, u_im);
        let (yw_re, yw_im) = cmul(y_re, y_im, w_re, w_im);
        let (xw_re, xw_im) = cmul(x_re, x_im, w_re, w_im);
        let (yu_re, yu_im) = cmul(y_re, y_im, u_re, u_im);
        let two = q(2);
        Coefficient {
            a: xu_re + &two * yw_re,
            b: xu_im + &two * yw_im,
            c: xw_re + yu_re,
            d: xw_im + yu_im,
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, o: Coefficient) -> Coefficient {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

fn fmt_gauss(f: &mut fmt::Formatter<'_>, re: &Q, im: &Q) -> fmt::Result {
    let sign = if im.is_negative() { '-' } else { '+' };
    write!(f, "({}{}{}i)", re, sign, im.abs())
}

/// `re + im i` without redundant parts; `None` for zero. The sign of a
/// single real or imaginary part is kept in front.
fn gauss_compact(re: &Q, im: &Q) -> Option<String> {
    let imag = |x: &Q| -> String {
        if x.is_one() {
            "i".into()
        } else if (-x).is_one() {
            "-i".into()
        } else if x.is_integer() {
            alloc::format!("{x}i")
        } else {
            alloc::format!(
                "{}i/{}",
                if x.numer().is_one() {
                    String::new()
                } else if (-x.numer()).is_one() {
                    String::from("-")
                } else {
                    alloc::format!("{}", x.numer())
                },
                x.denom()
            )
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (true, true) => None,
        (false, true) => Some(alloc::format!("{re}")),
        (true, false) => Some(imag(im)),
        (false, false) => {
            let sign = if im.is_negative() { '-' } else { '+' };
            Some(alloc::format!("({re}{sign}{})", imag(&im.abs())))
        }
    }
}

impl Coefficient {
    /// Short form for printing relations: `1`, `-i`, `1/2`, `(1+2i)`, `√2/2`.
    pub fn compact(&self) -> String {
        let base = gauss_compact(&self.a, &self.b);
        let root = gauss_compact(&self.c, &self.d).map(|r| match r.as_str() {
            "1" => "√2".into(),
            "-1" => "-√2".into(),
            _ => alloc::format!("{r}√2"),
        });
        match (base, root) {
            (None, None) => "0".into(),
            (Some(b), None) => b,
            (None, Some(r)) => r,
            (Some(b), Some(r)) => alloc::format!("({b} + {r})"),
        }
    }
}

impl fmt::Display for Coefficient {
    /// Renders as `(a+bi)` with an optional ` + (c+di)√2` tail.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_gauss(f, &self.a, &self.b)?;
        if !(self.c.is_zero() && self.d.is_zero()) {
            f.write_str(" + ")?;
            fmt_gauss(f, &self.c, &self.d)?;
            f.write_str("√2")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Coefficient::sqrt2();
        assert_eq!(&s * &s, Coefficient::from_int(2));
        assert_eq!(&Coefficient::inv_sqrt2() * &s, Coefficient::one());
    }

    #[test]
    fn i_powers_cycle() {
        assert_eq!(Coefficient::i_pow(2), Coefficient::from_int(-1));
        assert_eq!(Coefficient::i_pow(-1), -Coefficient::i());
        assert_eq!(&Coefficient::i() * &Coefficient::i_pow(3), Coefficient::one());
    }

    #[test]
    fn inverse_of_mixed_element() {
        // (1 + i) + (2 - i)√2
        let x = Coefficient::new(q(1), q(1), q(2), q(-1));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Coefficient::one());
        assert!(Coefficient::zero().inv().is_none());
    }

    #[test]
    fn display_format() {
        let x = Coefficient::new(Q::new(1.into(), 2.into()), q(-3), q(0), q(1));
        assert_eq!(format!("{}", x), "(1/2-3i) + (0+1i)√2");
        assert_eq!(format!("{}", Coefficient::one()), "(1+0i)");
    }

    fn coeff() -> impl proptest::strategy::Strategy<Value = Coefficient> {
        use proptest::prelude::*;
        let r = (-6i64..6, 1i64..5).prop_map(|(a, b)| Q::new(a.into(), b.into()));
        (r.clone(), r.clone(), r.clone(), r).prop_map(|(a, b, c, d)| Coefficient::new(a, b, c, d))
    }

    proptest::proptest! {
        #[test]
        fn field_laws(a in coeff(), b in coeff(), c in coeff()) {
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert!((&a - &a).is_zero());
            if let Some(inv) = a.inv() {
                assert!(&a * &inv == Coefficient::one());
            } else {
                assert!(a.is_zero());
            }
        }
    }
}
