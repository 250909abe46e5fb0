use std::fmt;
use std::str::FromStr;

/// Element `t^twist · σ_{i1}^{e1} ⋯ σ_{ik}^{ek}` of the extended braid group.
/// Letters are kept merged: no zero exponents and no equal adjacent generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<(u8, i64)>,
    twist: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordParseError {
    #[error("bad token '{token}' at position {pos}")]
    BadToken { token: String, pos: usize },
}

impl BraidWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn sigma(i: u8, e: i64) -> Self {
        Self::new(&[(i, e)], 0)
    }

    pub fn twist_only(s: i64) -> Self {
        Self::new(&[], s)
    }

    pub fn new(letters: &[(u8, i64)], twist: i64) -> Self {
        let mut w = Self { letters: Vec::with_capacity(letters.len()), twist };
        for &(g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Appends `σ_g^e`, merging with the last letter when possible.
    pub fn push(&mut self, g: u8, e: i64) {
        assert!(g == 1 || g == 2, "generator index must be 1 or 2");
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(u8, i64)] {
        &self.letters
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty() && self.twist == 0
    }

    /// Braid degree: exponent sum plus twice the twist.
    pub fn bdeg(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e).sum::<i64>() + 2 * self.twist
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out.twist += other.twist;
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self { letters: Vec::new(), twist: -self.twist };
        for &(g, e) in self.letters.iter().rev() {
            out.push(g, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.concat(&base))
    }

    /// Unit-exponent letters, each as `(generator, ±1)`.
    pub fn expanded(&self) -> impl Iterator<Item = (u8, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut tokens: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| if e == 1 { format!("s{g}") } else { format!("s{g}^{e}") })
            .collect();
        if self.twist != 0 {
            tokens.push(if self.twist == 1 { "t".into() } else { format!("t^{}", self.twist) });
        }
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = WordParseError;

    /// Whitespace-separated tokens `s1`, `s2^-3`, `t^4`; `id` or empty text
    /// is the identity.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut w = BraidWord::identity();
        let mut pos = 0;
        for token in text.split_whitespace() {
            pos = text[pos..].find(token).map_or(pos, |i| pos + i);
            let bad = || WordParseError::BadToken { token: token.to_string(), pos };
            if token == "id" {
                continue;
            }
            let (head, exp) = match token.split_once('^') {
                Some((h, e)) => (h, e.parse::<i64>().map_err(|_| bad())?),
                None => (token, 1),
            };
            match head {
                "s1" => w.push(1, exp),
                "s2" => w.push(2, exp),
                "t" => w.twist += exp,
                _ => return Err(bad()),
            }
            pos += token.len();
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: BraidWord = "s1 s2^-3 t^4".parse().unwrap();
        assert_eq!(w.letters(), &[(1, 1), (2, -3)]);
        assert_eq!(w.twist(), 4);
        assert_eq!(w.to_string(), "s1 s2^-3 t^4");
        assert_eq!(w.bdeg(), 1 - 3 + 8);
        assert_eq!("id".parse::<BraidWord>().unwrap(), BraidWord::identity());
        assert_eq!(BraidWord::identity().to_string(), "id");
    }

    #[test]
    fn merges_adjacent_letters() {
        let w: BraidWord = "s1 s1^-1 s2 s2".parse().unwrap();
        assert_eq!(w.letters(), &[(2, 2)]);
        assert_eq!(w.concat(&w.inverse()), BraidWord::identity());
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!("s3".parse::<BraidWord>().is_err());
        assert!("s1^x".parse::<BraidWord>().is_err());
        match "s1 foo".parse::<BraidWord>() {
            Err(WordParseError::BadToken { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }
}
