//! Exact field arithmetic over Q and over the rational-function field Q(alpha).
//!
//! `Scalar` is a tagged union of the two domains. Mixed arithmetic promotes
//! rationals to constant rational functions; results that come out constant
//! are demoted back, so structural equality is canonical equality.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Univariate polynomial in alpha with rational coefficients, ascending
/// degree order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn alpha() -> Self {
        Poly::new(vec![int(0), int(1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| int(0))
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(|| int(0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(int(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Leading coefficient becomes 1.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        self.scale(&(int(1) / lead))
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        let mut acc = int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.clone();
        let mut quo = vec![int(0); self.coeffs.len() - d.coeffs.len() + 1];
        let dlead = d.leading();
        while !rem.is_zero() && rem.coeffs.len() >= d.coeffs.len() {
            let shift = rem.coeffs.len() - d.coeffs.len();
            let c = rem.leading() / dlead.clone();
            let mut sub = vec![int(0); shift];
            sub.extend(d.coeffs.iter().map(|x| x * &c));
            rem = &rem - &Poly::new(sub);
            quo[shift] = c;
        }
        (Poly::new(quo), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "alpha")?;
                } else {
                    write!(f, "alpha^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Rational function numerator/denominator, with the denominator monic and
/// coprime to the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::constant(int(1)),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading();
        RatFunc {
            num: num.scale(&(int(1) / lead.clone())),
            den: den.scale(&(int(1) / lead)),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.degree() == 0 {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn eval_at(&self, a: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(Error::Pole {
                denom: self.den.to_string(),
                at: fmt_rational(a),
            });
        }
        Ok(self.num.eval(a) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            let multi = self.num.coeffs.iter().filter(|c| !c.is_zero()).count() > 1;
            if multi {
                write!(f, "({})/({})", self.num, self.den)
            } else {
                write!(f, "{}/({})", self.num, self.den)
            }
        }
    }
}

/// Exact field element: a rational number, or a rational function in alpha.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(Rational),
    Fun(RatFunc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(int(0))
    }

    pub fn one() -> Self {
        Scalar::Rat(int(1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(int(n))
    }

    pub fn from_rat(n: i64, d: i64) -> Self {
        Scalar::Rat(rat(n, d))
    }

    /// The indeterminate alpha.
    pub fn alpha() -> Self {
        Scalar::Fun(RatFunc {
            num: Poly::alpha(),
            den: Poly::constant(int(1)),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fun(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fun(_) => false,
        }
    }

    /// Demote a constant rational function to a plain rational.
    fn canonical(self) -> Self {
        match self {
            Scalar::Fun(f) => match f.as_constant() {
                Some(c) => Scalar::Rat(c),
                None => Scalar::Fun(f),
            },
            s => s,
        }
    }

    fn as_fun(&self) -> RatFunc {
        match self {
            Scalar::Rat(r) => RatFunc {
                num: Poly::constant(r.clone()),
                den: Poly::constant(int(1)),
            },
            Scalar::Fun(f) => f.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Fun(f) => f.as_constant(),
        }
    }

    pub fn field_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            _ => {
                let (a, b) = (self.as_fun(), rhs.as_fun());
                Scalar::Fun(RatFunc::normalized(&a.num * &b.den, &a.den * &b.num)).canonical()
            }
        })
    }

    pub fn inverse(&self) -> Result<Scalar, Error> {
        Scalar::one().field_div(self)
    }

    /// Exact evaluation at a concrete alpha; the identity on rationals.
    pub fn eval_at(&self, a: &Rational) -> Result<Rational, Error> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Fun(f) => f.eval_at(a),
        }
    }

    /// Sign of the value near `sample`, probing past poles and, for the
    /// comparison of distinct functions that collide at the sample point,
    /// at sample+1, sample+2, ... (distinct rational functions agree at
    /// only finitely many points, so this terminates).
    pub fn sign_at_sample(&self, sample: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut a = sample.clone();
        loop {
            match self.eval_at(&a) {
                Ok(v) if !v.is_zero() => {
                    return if v.is_positive() { 1 } else { -1 };
                }
                _ => a += int(1),
            }
        }
    }

    /// |self| with the sign decided at the sample point (exact for rationals).
    pub fn abs_at_sample(&self, sample: &Rational) -> Scalar {
        if self.sign_at_sample(sample) < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Order two scalars as functions near the sample (ties broken by probing
    /// rightwards until the functions separate).
    pub fn cmp_at_sample(&self, other: &Scalar, sample: &Rational) -> std::cmp::Ordering {
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        let diff = other - self;
        match diff.sign_at_sample(sample) {
            s if s > 0 => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// True if the scalar is a non-negative integer (natural edge multiplicity).
    pub fn as_natural(&self) -> Option<u64> {
        let r = self.as_rational()?;
        if r.denom().is_one() && !r.is_negative() {
            r.numer().try_into().ok()
        } else {
            None
        }
    }

    pub fn parse(input: &str) -> Result<Scalar, Error> {
        parse::parse_scalar(input)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Fun(x) => write!(f, "{}", x),
        }
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    _ => {
                        let (a, b) = (self.as_fun(), rhs.as_fun());
                        scalar_binop!(@fun $method, a, b)
                    }
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
    (@fun add, $a:ident, $b:ident) => {
        Scalar::Fun(RatFunc::normalized(
            &(&$a.num * &$b.den) + &(&$b.num * &$a.den),
            &$a.den * &$b.den,
        ))
        .canonical()
    };
    (@fun sub, $a:ident, $b:ident) => {
        Scalar::Fun(RatFunc::normalized(
            &(&$a.num * &$b.den) - &(&$b.num * &$a.den),
            &$a.den * &$b.den,
        ))
        .canonical()
    };
    (@fun mul, $a:ident, $b:ident) => {
        Scalar::Fun(RatFunc::normalized(&$a.num * &$b.num, &$a.den * &$b.den)).canonical()
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fun(f) => Scalar::Fun(RatFunc {
                num: -&f.num,
                den: f.den.clone(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Panics on a zero divisor; use `field_div` where the divisor is not known
/// to be invertible.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.field_div(rhs).expect("division by zero scalar")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

mod parse {
    //! Recursive-descent parser for the rendered scalar grammar:
    //! integers, `p/q`, `alpha`, `+ - * / ^`, parentheses.

    use super::*;

    pub fn parse_scalar(input: &str) -> Result<Scalar, Error> {
        let mut p = Parser {
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            input,
        };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::ParseScalar(input.to_string()));
        }
        Ok(v)
    }

    struct Parser<'a> {
        chars: Vec<char>,
        pos: usize,
        input: &'a str,
    }

    impl Parser<'_> {
        fn err(&self) -> Error {
            Error::ParseScalar(self.input.to_string())
        }

        fn peek(&self) -> Option<char> {
            self.chars.get(self.pos).copied()
        }

        fn eat(&mut self, c: char) -> bool {
            if self.peek() == Some(c) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn expr(&mut self) -> Result<Scalar, Error> {
            let mut acc = self.term()?;
            loop {
                if self.eat('+') {
                    acc = acc + self.term()?;
                } else if self.eat('-') {
                    acc = acc - self.term()?;
                } else {
                    return Ok(acc);
                }
            }
        }

        fn term(&mut self) -> Result<Scalar, Error> {
            let mut acc = self.factor()?;
            loop {
                if self.eat('*') {
                    acc = acc * self.factor()?;
                } else if self.eat('/') {
                    acc = acc.field_div(&self.factor()?)?;
                } else {
                    return Ok(acc);
                }
            }
        }

        fn factor(&mut self) -> Result<Scalar, Error> {
            if self.eat('-') {
                return Ok(-self.factor()?);
            }
            let base = self.atom()?;
            if self.eat('^') {
                let e = self.uint()?;
                let mut acc = Scalar::one();
                for _ in 0..e {
                    acc = acc * base.clone();
                }
                return Ok(acc);
            }
            Ok(base)
        }

        fn atom(&mut self) -> Result<Scalar, Error> {
            match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let v = self.expr()?;
                    if !self.eat(')') {
                        return Err(self.err());
                    }
                    Ok(v)
                }
                Some(c) if c.is_ascii_digit() => Ok(Scalar::Rat(int(self.uint()? as i64))),
                Some(c) if c.is_alphabetic() || c == 'α' => {
                    let start = self.pos;
                    while self
                        .peek()
                        .is_some_and(|c| c.is_alphanumeric() || c == 'α')
                    {
                        self.pos += 1;
                    }
                    let word: String = self.chars[start..self.pos].iter().collect();
                    match word.as_str() {
                        "alpha" | "a" | "α" => Ok(Scalar::alpha()),
                        _ => Err(self.err()),
                    }
                }
                _ => Err(self.err()),
            }
        }

        fn uint(&mut self) -> Result<u64, Error> {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err());
            }
            self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.err())
        }
    }
}
