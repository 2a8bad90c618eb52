//! Positional `key=value` parameters, with inclusive ranges `a..b`.

use std::fmt;
use std::str::FromStr;

use crate::error::{bad, CliResult};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    entries: Vec<(String, String)>,
}

impl Params {
    /// Parses `key=value` tokens. A bare word is stored under the key `set`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> CliResult<Self> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for token in tokens {
            let token = token.as_ref();
            for part in token.split(',').filter(|p| !p.is_empty()) {
                let (key, value) = match part.split_once('=') {
                    Some((k, v)) if !k.is_empty() && !v.is_empty() => (k, v),
                    Some(_) => return Err(bad(format!("malformed parameter '{part}'"))),
                    None => ("set", part),
                };
                if entries.iter().any(|(k, _)| k == key) {
                    return Err(bad(format!("parameter '{key}' given twice")));
                }
                entries.push((key.to_string(), value.to_string()));
            }
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn contains(&self, key: &str) -> bool {
        self.get(key).is_some()
    }

    pub fn value<T: FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| bad(format!("cannot parse {key}={v}")))
            })
            .transpose()
    }

    pub fn require<T: FromStr>(&self, key: &str) -> CliResult<T> {
        self.value(key)?
            .ok_or_else(|| bad(format!("missing parameter '{key}'")))
    }

    pub fn value_or<T: FromStr>(&self, key: &str, default: T) -> CliResult<T> {
        Ok(self.value(key)?.unwrap_or(default))
    }

    /// An inclusive range `a..b` (or `a..=b`, or a single value `a`).
    pub fn range<T>(&self, key: &str) -> CliResult<Option<Vec<T>>>
    where
        T: FromStr + Copy + PartialOrd + num_step::Step,
    {
        let Some(v) = self.get(key) else {
            return Ok(None);
        };
        let parse = |s: &str| {
            s.parse::<T>()
                .map_err(|_| bad(format!("cannot parse {key}={v}")))
        };
        let (lo, hi) = match v.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let x = parse(v)?;
                (x, x)
            }
        };
        if lo > hi {
            return Err(bad(format!("empty range {key}={v}")));
        }
        Ok(Some(num_step::inclusive(lo, hi)))
    }

    pub fn range_or<T>(&self, key: &str, lo: T, hi: T) -> CliResult<Vec<T>>
    where
        T: FromStr + Copy + PartialOrd + num_step::Step,
    {
        Ok(self
            .range(key)?
            .unwrap_or_else(|| num_step::inclusive(lo, hi)))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Integer stepping for the range helper.
pub mod num_step {
    pub trait Step: Sized {
        fn next(self) -> Self;
    }

    macro_rules! step {
        ($($t:ty),*) => {$(
            impl Step for $t {
                fn next(self) -> Self {
                    self + 1
                }
            }
        )*};
    }
    step!(u32, u64, i64, usize);

    pub fn inclusive<T: Step + Copy + PartialOrd>(lo: T, hi: T) -> Vec<T> {
        let mut out = vec![lo];
        let mut x = lo;
        while x < hi {
            x = x.next();
            out.push(x);
        }
        out
    }
}
