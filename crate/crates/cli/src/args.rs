//! Parsers for numeric flags and list/grid specifications.
//!
//! Integers may be written in decimal or as a power `b^e` (`2^64`). Lists are
//! comma-separated; an item may also be a range `a..b` (exclusive) or
//! `a..=b` (inclusive).

fn parse_int(s: &str) -> Result<u128, String> {
    let s = s.trim();
    if let Some((base, exp)) = s.split_once('^') {
        let base: u128 = base
            .trim()
            .parse()
            .map_err(|_| format!("invalid base in `{s}`"))?;
        let exp: u32 = exp
            .trim()
            .parse()
            .map_err(|_| format!("invalid exponent in `{s}`"))?;
        return base
            .checked_pow(exp)
            .ok_or_else(|| format!("`{s}` overflows 128 bits"));
    }
    s.parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

pub fn parse_alphabet(s: &str) -> Result<u128, String> {
    parse_int(s)
}

pub fn parse_length(s: &str) -> Result<usize, String> {
    let v = parse_int(s)?;
    usize::try_from(v).map_err(|_| format!("`{s}` is too large for a length"))
}

pub fn parse_list(s: &str) -> Result<Vec<u128>, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(format!("empty item in list `{s}`"));
        }
        if let Some((lo, hi)) = item.split_once("..") {
            let (hi, inclusive) = match hi.strip_prefix('=') {
                Some(h) => (h, true),
                None => (hi, false),
            };
            let (lo, hi) = (parse_int(lo)?, parse_int(hi)?);
            let end = if inclusive {
                hi.checked_add(1).ok_or("range end overflows")?
            } else {
                hi
            };
            if lo >= end {
                return Err(format!("empty range `{item}`"));
            }
            if end - lo > 1_000_000 {
                return Err(format!("range `{item}` has more than 10^6 items"));
            }
            out.extend(lo..end);
        } else {
            out.push(parse_int(item)?);
        }
    }
    Ok(out)
}

/// Alphabet sizes, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetList(pub Vec<u128>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthList(pub Vec<usize>);

pub fn parse_alphabet_list(s: &str) -> Result<AlphabetList, String> {
    let v = parse_list(s)?;
    if v.contains(&0) {
        return Err("alphabet sizes must be at least 1".into());
    }
    Ok(AlphabetList(v))
}

pub fn parse_length_list(s: &str) -> Result<LengthList, String> {
    parse_list(s)?
        .into_iter()
        .map(|v| usize::try_from(v).map_err(|_| format!("length {v} too large")))
        .collect::<Result<_, _>>()
        .map(LengthList)
}
