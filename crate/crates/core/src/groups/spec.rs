use std::fmt;
use std::str::FromStr;

use crate::complex::PrimeSimplex;
use crate::error::{Error, Result};

/// Textual description of a group.
///
/// Syntax: `Sym(n)`, `Alt(n)`, `Nil(p1,p2,...)`, `PSL2(q)`, `PSL3(q)`,
/// `PSU3(q)`, `Sz(m)`, `2G2(m)`, `PSL(n,q)`, `fixture:NAME`, and products
/// joined with `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Symmetric(u64),
    Alternating(u64),
    Nilpotent(PrimeSimplex),
    Psl2(u64),
    Psl3(u64),
    Psu3(u64),
    /// `Sz(q)` with `q = 2^(2m+1)`.
    Suzuki(u32),
    /// `2G2(q)` with `q = 3^(2m+1)`.
    Ree(u32),
    Psl { n: u32, q: u64 },
    Product(Vec<GroupSpec>),
    Fixture(String),
}

fn args(ctx: &str, inner: &str) -> Result<Vec<u64>> {
    inner
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(ctx, format!("`{}` is not a natural number", a.trim())))
        })
        .collect()
}

fn one(ctx: &str, inner: &str) -> Result<u64> {
    match args(ctx, inner)?.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::parse(ctx, "expected exactly one argument")),
    }
}

fn small(ctx: &str, x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::parse(ctx, "parameter too large"))
}

fn parse_factor(s: &str) -> Result<GroupSpec> {
    let ctx = format!("group `{s}`");
    if let Some(name) = s.strip_prefix("fixture:") {
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::parse(ctx, "empty fixture name"));
        }
        return Ok(GroupSpec::Fixture(name.to_string()));
    }
    let open = s
        .find('(')
        .ok_or_else(|| Error::parse(&ctx, "expected FAMILY(args)"))?;
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::parse(&ctx, "missing closing parenthesis"))?;
    let family = s[..open].trim();
    let spec = match family.to_ascii_lowercase().as_str() {
        "sym" | "s" => GroupSpec::Symmetric(one(&ctx, inner)?),
        "alt" | "a" => GroupSpec::Alternating(one(&ctx, inner)?),
        "nil" => GroupSpec::Nilpotent(PrimeSimplex::new(args(&ctx, inner)?)?),
        "psl2" => GroupSpec::Psl2(one(&ctx, inner)?),
        "psl3" => GroupSpec::Psl3(one(&ctx, inner)?),
        "psu3" => GroupSpec::Psu3(one(&ctx, inner)?),
        "sz" | "2b2" => GroupSpec::Suzuki(small(&ctx, one(&ctx, inner)?)?),
        "2g2" | "ree" => GroupSpec::Ree(small(&ctx, one(&ctx, inner)?)?),
        "psl" => match args(&ctx, inner)?.as_slice() {
            [n, q] => GroupSpec::Psl {
                n: small(&ctx, *n)?,
                q: *q,
            },
            _ => return Err(Error::parse(ctx, "expected PSL(n,q)")),
        },
        _ => return Err(Error::parse(ctx, format!("unknown family `{family}`"))),
    };
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors: Vec<GroupSpec> = s
            .split('*')
            .map(|f| parse_factor(f.trim()))
            .collect::<Result<_>>()?;
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(GroupSpec::Product(factors))
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "Sym({n})"),
            GroupSpec::Alternating(n) => write!(f, "Alt({n})"),
            GroupSpec::Nilpotent(s) => {
                let ps: Vec<String> = s.primes().iter().map(u64::to_string).collect();
                write!(f, "Nil({})", ps.join(","))
            }
            GroupSpec::Psl2(q) => write!(f, "PSL2({q})"),
            GroupSpec::Psl3(q) => write!(f, "PSL3({q})"),
            GroupSpec::Psu3(q) => write!(f, "PSU3({q})"),
            GroupSpec::Suzuki(m) => write!(f, "Sz({m})"),
            GroupSpec::Ree(m) => write!(f, "2G2({m})"),
            GroupSpec::Psl { n, q } => write!(f, "PSL({n},{q})"),
            GroupSpec::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Fixture(name) => write!(f, "fixture:{name}"),
        }
    }
}
