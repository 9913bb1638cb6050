//! Normal-form arithmetic in the three acting groups: the free group `Fₙ`,
//! the n-adic semidirect product `ℚₙ ⋊ ℤ`, and the affine group `ℚ ⋊ ℚ^×`
//! (optionally restricted to positive dilations).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::space::Word;
use crate::Q;

/// A generator `g_i` or its inverse. `generator` is zero based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u32, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    fn flip(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: u32) -> Self {
        FreeWord(vec![Letter::new(i, false)])
    }

    /// The positive word `g_{w_1} g_{w_2} …`.
    pub fn positive(word: &[u32]) -> Self {
        FreeWord(word.iter().map(|&g| Letter::new(g, false)).collect())
    }

    /// Accepts only words that are already reduced.
    pub fn from_reduced(letters: Vec<Letter>) -> Result<Self> {
        if let Some(i) = letters.windows(2).position(|p| p[0].cancels(p[1])) {
            return Err(Error::InvalidElement(format!("word is not reduced at position {}", i + 1)));
        }
        Ok(FreeWord(letters))
    }

    /// Free reduction of an arbitrary word.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|&top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        FreeWord::reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    /// Writes the word as `μ ν⁻¹` with `μ`, `ν` positive, if it has that shape.
    pub fn split(&self) -> Option<(Word, Word)> {
        let cut = self.0.iter().position(|l| l.inverse).unwrap_or(self.0.len());
        let (pos, neg) = self.0.split_at(cut);
        if neg.iter().any(|l| !l.inverse) {
            return None;
        }
        let mu = pos.iter().map(|l| l.generator).collect();
        let nu = neg.iter().rev().map(|l| l.generator).collect();
        Some((mu, nu))
    }

    /// `μ ν⁻¹`, reduced.
    pub fn from_split(mu: &[u32], nu: &[u32]) -> FreeWord {
        FreeWord::positive(mu).mul(&FreeWord::positive(nu).inverse())
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.0.iter().map(|l| l.generator).max()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverse { format!("g{}^-1", l.generator + 1) } else { format!("g{}", l.generator + 1) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `"g1 g2^-1"`; the empty string is the identity. The word must be
    /// reduced.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("bad free-group letter {tok:?}"));
            let body = tok.strip_prefix('g').ok_or_else(bad)?;
            let (num, inverse) = match body.strip_suffix("^-1") {
                Some(num) => (num, true),
                None => (body, false),
            };
            let g: u32 = num.parse().map_err(|_| bad())?;
            if g == 0 {
                return Err(bad());
            }
            letters.push(Letter::new(g - 1, inverse));
        }
        FreeWord::from_reduced(letters)
    }
}

/// `nᵉ` as an exact rational; `e` may be negative.
pub fn n_pow(n: u32, e: i64) -> Q {
    let base = Q::from_integer(n as i128);
    let e = i32::try_from(e).expect("exponent fits in i32");
    base.pow(e)
}

/// Smallest `j` with `den | nʲ`, if any.
pub(crate) fn nadic_exponent(den: i128, n: u32) -> Option<u32> {
    let mut d = den.abs();
    let mut j = 0;
    while d != 1 {
        let g = d.gcd(&(n as i128));
        if g == 1 {
            return None;
        }
        d /= g;
        j += 1;
    }
    Some(j)
}

/// `(r, k) ∈ ℚₙ ⋊ ℤ`, acting by `x ↦ x/nᵏ + r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NAdicElem {
    n: u32,
    r: Q,
    k: i64,
}

impl NAdicElem {
    pub fn new(n: u32, r: Q, k: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidElement(format!("n = {n} is below 2")));
        }
        if nadic_exponent(*r.denom(), n).is_none() {
            return Err(Error::InvalidElement(format!("{r} has a denominator that is not a power of {n}")));
        }
        Ok(NAdicElem { n, r, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> Q {
        self.r
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `(s, j)(r, k) = (r/nʲ + s, j + k)`.
    pub fn mul(&self, other: &NAdicElem) -> Result<NAdicElem> {
        if self.n != other.n {
            return Err(Error::GroupMismatch(format!("n = {} vs n = {}", self.n, other.n)));
        }
        Ok(NAdicElem { n: self.n, r: other.r * n_pow(self.n, -self.k) + self.r, k: self.k + other.k })
    }

    /// `(r, k)⁻¹ = (−nᵏ r, −k)`.
    pub fn inverse(&self) -> NAdicElem {
        NAdicElem { n: self.n, r: -(n_pow(self.n, self.k) * self.r), k: -self.k }
    }
}

/// `(u, w) ∈ ℚ ⋊ ℚ^×`, acting by `x ↦ u + w x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElem {
    u: Q,
    w: Q,
    positive: bool,
}

impl AffineElem {
    pub fn new(u: Q, w: Q, positive: bool) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::InvalidElement("dilation w must be nonzero".into()));
        }
        if positive && w.is_negative() {
            return Err(Error::InvalidElement(format!("w = {w} is negative in the positive subgroup")));
        }
        Ok(AffineElem { u, w, positive })
    }

    pub fn u(&self) -> Q {
        self.u
    }

    pub fn w(&self) -> Q {
        self.w
    }

    pub fn positive_only(&self) -> bool {
        self.positive
    }

    /// `(u, w)(u', w') = (u + u'w, ww')`.
    pub fn mul(&self, other: &AffineElem) -> Result<AffineElem> {
        if self.positive != other.positive {
            return Err(Error::GroupMismatch("ℚ ⋊ ℚ^× vs ℚ ⋊ ℚ^×₊".into()));
        }
        Ok(AffineElem { u: self.u + other.u * self.w, w: self.w * other.w, positive: self.positive })
    }

    /// `(u, w)⁻¹ = (−u/w, 1/w)`.
    pub fn inverse(&self) -> AffineElem {
        AffineElem { u: -self.u / self.w, w: self.w.recip(), positive: self.positive }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElem {
    Free(FreeWord),
    NAdic(NAdicElem),
    Affine(AffineElem),
}

impl GroupElem {
    pub fn variant(&self) -> &'static str {
        match self {
            GroupElem::Free(_) => "free",
            GroupElem::NAdic(_) => "nadic",
            GroupElem::Affine(_) => "affine",
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElem::Free(w) => w.is_empty(),
            GroupElem::NAdic(e) => e.r.is_zero() && e.k == 0,
            GroupElem::Affine(e) => e.u.is_zero() && e.w.is_one(),
        }
    }

    pub fn as_free(&self) -> Option<&FreeWord> {
        match self {
            GroupElem::Free(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::Free(w) if w.is_empty() => f.write_str("e"),
            GroupElem::Free(w) => write!(f, "{w}"),
            GroupElem::NAdic(e) => write!(f, "({}, {})", e.r, e.k),
            GroupElem::Affine(e) => write!(f, "({}, {})", e.u, e.w),
        }
    }
}

impl From<FreeWord> for GroupElem {
    fn from(w: FreeWord) -> Self {
        GroupElem::Free(w)
    }
}

impl From<NAdicElem> for GroupElem {
    fn from(e: NAdicElem) -> Self {
        GroupElem::NAdic(e)
    }
}

impl From<AffineElem> for GroupElem {
    fn from(e: AffineElem) -> Self {
        GroupElem::Affine(e)
    }
}

pub fn g_mul(a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
    match (a, b) {
        (GroupElem::Free(x), GroupElem::Free(y)) => Ok(GroupElem::Free(x.mul(y))),
        (GroupElem::NAdic(x), GroupElem::NAdic(y)) => Ok(GroupElem::NAdic(x.mul(y)?)),
        (GroupElem::Affine(x), GroupElem::Affine(y)) => Ok(GroupElem::Affine(x.mul(y)?)),
        _ => Err(Error::GroupMismatch(format!("{} vs {}", a.variant(), b.variant()))),
    }
}

pub fn g_inv(a: &GroupElem) -> GroupElem {
    match a {
        GroupElem::Free(x) => GroupElem::Free(x.inverse()),
        GroupElem::NAdic(x) => GroupElem::NAdic(x.inverse()),
        GroupElem::Affine(x) => GroupElem::Affine(x.inverse()),
    }
}

pub fn word_length(a: &GroupElem) -> Result<usize> {
    a.as_free()
        .map(FreeWord::len)
        .ok_or_else(|| Error::GroupMismatch(format!("word length of a {} element", a.variant())))
}

pub fn positive_negative_split(a: &GroupElem) -> Result<Option<(Word, Word)>> {
    a.as_free().map(FreeWord::split).ok_or_else(|| Error::GroupMismatch(format!("split of a {} element", a.variant())))
}

/// Which group a system is acted on by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Free { rank: u32 },
    NAdic { n: u32 },
    Affine { positive_only: bool },
}

impl Group {
    pub fn identity(&self) -> GroupElem {
        match *self {
            Group::Free { .. } => GroupElem::Free(FreeWord::identity()),
            Group::NAdic { n } => GroupElem::NAdic(NAdicElem { n, r: Q::zero(), k: 0 }),
            Group::Affine { positive_only } => {
                GroupElem::Affine(AffineElem { u: Q::zero(), w: Q::one(), positive: positive_only })
            }
        }
    }

    pub fn contains(&self, t: &GroupElem) -> bool {
        match (*self, t) {
            (Group::Free { rank }, GroupElem::Free(w)) => w.max_generator().is_none_or(|g| g < rank),
            (Group::NAdic { n }, GroupElem::NAdic(e)) => e.n == n,
            (Group::Affine { positive_only }, GroupElem::Affine(e)) => e.positive == positive_only,
            _ => false,
        }
    }

    pub fn check(&self, t: &GroupElem) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{t} is not in {self}")))
        }
    }

    pub fn nadic(&self, r: Q, k: i64) -> Result<GroupElem> {
        match *self {
            Group::NAdic { n } => Ok(NAdicElem::new(n, r, k)?.into()),
            _ => Err(Error::GroupMismatch(format!("{self} has no n-adic elements"))),
        }
    }

    pub fn affine(&self, u: Q, w: Q) -> Result<GroupElem> {
        match *self {
            Group::Affine { positive_only } => Ok(AffineElem::new(u, w, positive_only)?.into()),
            _ => Err(Error::GroupMismatch(format!("{self} has no affine elements"))),
        }
    }

    pub fn word(&self, w: &str) -> Result<GroupElem> {
        let t = GroupElem::Free(w.parse()?);
        self.check(&t)?;
        Ok(t)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Free { rank } => write!(f, "F_{rank}"),
            Group::NAdic { n } => write!(f, "Q_{n} ⋊ Z"),
            Group::Affine { positive_only: false } => f.write_str("Q ⋊ Q^×"),
            Group::Affine { positive_only: true } => f.write_str("Q ⋊ Q^×_+"),
        }
    }
}
