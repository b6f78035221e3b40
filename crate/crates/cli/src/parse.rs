//! Text forms accepted on the command line.

use uqgl2::rings::{c, root_of_unity};
use uqgl2::{Color, QValue, Scalar};

use crate::failure::{Failure, Outcome};

/// `"re,im"` or a bare real `"re"`.
pub fn complex(text: &str) -> Outcome<Scalar> {
    let text = text.trim();
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let number = |s: &str| {
        s.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Failure::input(format!("`{text}` is not a complex number `re,im`")))
    };
    match parts.as_slice() {
        [re] => Ok(c(number(re)?, 0.0)),
        [re, im] => Ok(c(number(re)?, number(im)?)),
        _ => Err(Failure::input(format!("`{text}` is not a complex number `re,im`"))),
    }
}

/// `--q` values: `["re,im"]`, `["root", "k/n"]` or `["root k/n"]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QSpec {
    pub value: QValue,
    pub is_root: bool,
}

pub fn q_spec(tokens: &[String]) -> Outcome<QSpec> {
    let joined = tokens.join(" ");
    let words: Vec<&str> = joined.split_whitespace().collect();
    match words.as_slice() {
        ["root", frac] => {
            let (k, n) = frac
                .split_once('/')
                .ok_or_else(|| Failure::input(format!("root spec `{frac}` is not `k/n`")))?;
            let k: i64 = k.trim().parse().map_err(|_| Failure::input(format!("bad numerator in `{frac}`")))?;
            let n: u32 = n.trim().parse().map_err(|_| Failure::input(format!("bad denominator in `{frac}`")))?;
            if n == 0 {
                return Err(Failure::input("root denominator must be positive"));
            }
            Ok(QSpec {
                value: root_of_unity(k, n),
                is_root: true,
            })
        }
        [literal] => {
            let value = complex(literal)?;
            if value.norm() == 0.0 {
                return Err(Failure::input("q must be nonzero"));
            }
            Ok(QSpec {
                value: QValue::generic(value),
                is_root: false,
            })
        }
        _ => Err(Failure::input(format!("`{joined}` is neither `re,im` nor `root k/n`"))),
    }
}

/// Repeated `--q` values arrive as one flat list; `root` always takes the next token.
pub fn q_specs(tokens: &[String]) -> Outcome<Vec<QSpec>> {
    let mut out = Vec::new();
    let mut rest = tokens;
    while let Some(first) = rest.first() {
        let take = if first.trim() == "root" { 2 } else { 1 };
        if rest.len() < take {
            return Err(Failure::input("`root` needs a `k/n` after it"));
        }
        out.push(q_spec(&rest[..take])?);
        rest = &rest[take..];
    }
    Ok(out)
}

/// `"sigma_re,sigma_im:g_re,g_im"`; `g` defaults to 1 when omitted.
pub fn color(text: &str) -> Outcome<Color> {
    let (sigma, g) = match text.split_once(':') {
        Some((s, g)) => (complex(s)?, complex(g)?),
        None => (complex(text)?, c(1.0, 0.0)),
    };
    Ok(Color { sigma, g })
}
