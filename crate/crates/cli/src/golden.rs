//! Named presets compared against embedded reference output.

use similar::TextDiff;

use freesub_core::arith::ModRingCtx;
use freesub_core::emit::to_latex;
use freesub_core::groups::GroupFamily;
use freesub_core::modular::rational_form;
use freesub_core::period::{analyze_form, horizon, predicted_period};

use crate::config::{Defaults, Tier};
use crate::{CmdResult, Failure, EXIT_GOLDEN};

const FREE7_5: &str = include_str!("../golden/free7_5.tex");
const FREE11_5: &str = include_str!("../golden/free11_5.tex");
const FREE13_5: &str = include_str!("../golden/free13_5.tex");

pub const PRESETS: [&str; 4] = ["free7^5", "free11^5", "free13^5", "periods-17"];

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// One summand per line, so a diff points at the differing term.
fn terms(s: &str) -> String {
    let mut out = String::new();
    for (i, part) in s.trim().split('+').enumerate() {
        if i > 0 {
            out.push('+');
        }
        out.push_str(part.trim());
        out.push('\n');
    }
    out
}

fn unified(expected: &str, actual: &str) -> String {
    TextDiff::from_lines(expected, actual).unified_diff().header("expected", "actual").to_string()
}

/// Compares ignoring whitespace; on mismatch the diff is over summands.
pub fn compare(expected: &str, actual: &str) -> Result<(), String> {
    if strip_ws(expected) == strip_ws(actual) {
        Ok(())
    } else {
        Err(unified(&terms(expected), &terms(actual)))
    }
}

fn display(p: u64, golden: &str) -> CmdResult {
    let form = rational_form(&GroupFamily::modular3(1), &ModRingCtx::new(p, 5)?)?;
    let actual = to_latex(&form);
    match compare(golden, &actual) {
        Ok(()) => Ok(format!("{actual}\nmatch: {p}^5 display reproduced exactly\n")),
        Err(diff) => {
            print!("{diff}");
            Err(Failure::new(EXIT_GOLDEN, format!("{p}^5 display differs from the reference")))
        }
    }
}

fn periods_17(tier: Tier) -> CmdResult {
    let family = GroupFamily::modular3(1);
    let top = match tier {
        Tier::Fast => 2,
        Tier::Slow => 3,
    };
    let (mut expected, mut actual) = (String::new(), String::new());
    for alpha in 1..=top {
        let form = rational_form(&family, &ModRingCtx::new(17, alpha)?)?;
        let report = analyze_form(&form, horizon(&family, &form)?)?;
        let t = predicted_period(&family, 17, alpha).expect("known for 17");
        expected += &format!("17^{alpha} period={t}\n");
        actual += &format!("17^{alpha} period={}\n", report.period);
    }
    if expected == actual {
        Ok(actual)
    } else {
        print!("{}", unified(&expected, &actual));
        Err(Failure::new(EXIT_GOLDEN, "detected periods differ from the reference values"))
    }
}

pub fn cmd_reproduce(_defaults: &Defaults, preset: &str, tier: Tier) -> CmdResult {
    match preset {
        "free7^5" => display(7, FREE7_5),
        "free11^5" => display(11, FREE11_5),
        "free13^5" => display(13, FREE13_5),
        "periods-17" => periods_17(tier),
        other => Err(Failure::invalid(format!("unknown preset {other:?}; choose one of {}", PRESETS.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_ignores_whitespace_only() {
        assert!(compare("1+ 2 z\n", "1+2z").is_ok());
        let diff = compare("1+2z+3z^2", "1+2z+4z^2").unwrap_err();
        assert!(diff.contains("-+3z^2") && diff.contains("++4z^2"), "{diff}");
    }
}
