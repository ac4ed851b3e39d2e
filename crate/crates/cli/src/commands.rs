use std::fmt::Write as _;
use std::io::Read;

use depthlab_core::depthcalc::{bratteli_dot, DepthEngine};
use depthlab_core::frobalg::{
    check_frobenius_system, check_separability, verify_d2_quasibases, verify_d3_from_d2,
};
use depthlab_core::groups::{parse_group, parse_subgroup};
use depthlab_core::indres::{mackey_check, SubgroupPair};
use depthlab_core::theorems::{tower_core_equivalence, verify_frobenius_pair};
use depthlab_core::{character_table, Error, NonNegIntMatrix, PermGroup};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::{Check, Command};

pub const INPUT_ERROR: u8 = 2;
pub const BOUND_EXCEEDED: u8 = 3;

pub struct Output {
    pub text: String,
    pub pass: bool,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderBound { .. } => BOUND_EXCEEDED,
            _ => INPUT_ERROR,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: INPUT_ERROR,
        message: message.into(),
    }
}

type Outcome = Result<Output, Failure>;

fn max_order() -> Result<Option<u64>, Failure> {
    match std::env::var("DEPTHLAB_MAX_ORDER") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            input_error(format!(
                "DEPTHLAB_MAX_ORDER={v:?} is not a positive integer"
            ))
        }),
        Err(_) => Ok(None),
    }
}

fn group(spec: &str) -> Result<PermGroup, Failure> {
    let g = parse_group(spec)?;
    Ok(match max_order()? {
        Some(bound) => g.with_max_order(bound),
        None => g,
    })
}

fn subgroup(parent: &PermGroup, spec: &str) -> Result<PermGroup, Failure> {
    Ok(parse_subgroup(parent, spec)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass(text: String) -> Outcome {
    Ok(Output { text, pass: true })
}

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Table { group: spec, json } => table(spec, *json),
        Command::Depth {
            group: g,
            subgroup: h,
            cap,
            json,
            matrix_only,
        } => depth(g, h, *cap, *json, *matrix_only),
        Command::Tower {
            group: g,
            middle: n,
            subgroup: h,
            json,
        } => tower(g, n, h, *json),
        Command::MatrixDepth { path, cap, json } => matrix_depth(path, *cap, *json),
        Command::Verify {
            check,
            groups,
            json,
        } => verify(*check, groups, *json),
        Command::Bratteli {
            group: g,
            subgroup: h,
        } => bratteli(g, h),
    }
}

fn table(spec: &str, json: bool) -> Outcome {
    let g = group(spec)?;
    g.check_bound()?;
    let t = character_table(&g)?;
    if json {
        return pass(pretty(&t.to_json()));
    }
    let mut out = format!(
        "{spec}: order {}, {} classes, exponent {}\n",
        g.order(),
        t.len(),
        t.exponent()
    );
    out.push_str(&t.to_text());
    pass(out)
}

fn pair(g: &str, h: &str) -> Result<SubgroupPair, Failure> {
    let gg = group(g)?;
    let hh = subgroup(&gg, h)?;
    gg.check_bound()?;
    Ok(SubgroupPair::new(&gg, &hh)?)
}

fn depth_report_text(engine: &mut DepthEngine, cap: u32) -> Result<(String, Value), Failure> {
    let report = engine.minimal_depth(cap)?;
    let mut text = String::from("S = M M^t\n");
    text.push_str(&engine.s().to_text());
    text.push_str(&report.to_text());
    Ok((text, report.to_json()))
}

fn depth(g: &str, h: &str, cap: u32, json: bool, matrix_only: bool) -> Outcome {
    let p = pair(g, h)?;
    let inc = p.inclusion_matrix()?;
    if matrix_only {
        return pass(if json {
            pretty(&inc.to_json())
        } else {
            inc.to_text(&format!("{h} ≤ {g}"))
        });
    }
    let mut engine = DepthEngine::new(inc.entries());
    let (report_text, report_json) = depth_report_text(&mut engine, cap)?;
    if json {
        return pass(pretty(&json!({
            "inclusion_matrix": inc.to_json(),
            "s_matrix": engine.s().to_json(),
            "report": report_json,
        })));
    }
    let mut out = String::from("M = inclusion matrix\n");
    out.push_str(&inc.to_text(&format!("{h} ≤ {g}")));
    out.push_str(&report_text);
    pass(out)
}

fn tower(g: &str, n: &str, h: &str, json: bool) -> Outcome {
    let gg = group(g)?;
    let nn = subgroup(&gg, n)?;
    let hh = subgroup(&nn, h)?;
    gg.check_bound()?;
    let r = tower_core_equivalence(&gg, &nn, &hh)?;
    let text = if json {
        pretty(&r.to_json())
    } else {
        let q = r
            .multiplier
            .as_ref()
            .map_or("-".to_string(), ToString::to_string);
        format!(
            "depth three by matrices (N M M^t M <= q N M): {} (q = {q})\nsubgroup inside the core of the middle group (order {}): {}\nagree: {}\n",
            yes(r.matrix_d3),
            r.core_order,
            yes(r.core_contains),
            yes(r.agree())
        )
    };
    Ok(Output {
        text,
        pass: r.agree(),
    })
}

fn read_matrix(path: &str) -> Result<NonNegIntMatrix, Failure> {
    let mut raw = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut raw)
            .map_err(|e| input_error(format!("reading standard input: {e}")))?;
    } else {
        raw = std::fs::read_to_string(path)
            .map_err(|e| input_error(format!("reading {path}: {e}")))?;
    }
    let v: Value = serde_json::from_str(&raw).map_err(|e| input_error(format!("{path}: {e}")))?;
    let m = NonNegIntMatrix::from_json(&v)?;
    let zero_row = (0..m.rows()).find(|&i| m.row(i).iter().all(|x| x.is_zero()));
    let zero_col = (0..m.cols()).find(|&j| (0..m.rows()).all(|i| m.get(i, j).is_zero()));
    if let Some(i) = zero_row {
        return Err(input_error(format!(
            "{path}: row {} is zero, not an inclusion matrix",
            i + 1
        )));
    }
    if let Some(j) = zero_col {
        return Err(input_error(format!(
            "{path}: column {} is zero, not an inclusion matrix",
            j + 1
        )));
    }
    Ok(m)
}

fn matrix_depth(path: &str, cap: u32, json: bool) -> Outcome {
    let m = read_matrix(path)?;
    let mut engine = DepthEngine::new(&m);
    let (report_text, report_json) = depth_report_text(&mut engine, cap)?;
    if json {
        return pass(pretty(&json!({
            "inclusion_matrix": m.to_json(),
            "s_matrix": engine.s().to_json(),
            "report": report_json,
        })));
    }
    let mut out = String::from("M\n");
    out.push_str(&m.to_text());
    out.push_str(&report_text);
    pass(out)
}

fn expect_groups(check: Check, groups: &[String], n: usize) -> Result<(), Failure> {
    if groups.len() != n {
        return Err(input_error(format!(
            "{check:?} takes {n} groups, got {}",
            groups.len()
        )));
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn verify(check: Check, groups: &[String], json: bool) -> Outcome {
    let (ok, text, value) = match check {
        Check::Frobenius => {
            expect_groups(check, groups, 2)?;
            let g = group(&groups[0])?;
            let h = subgroup(&g, &groups[1])?;
            g.check_bound()?;
            let r = verify_frobenius_pair(&g, &h)?;
            let ok = r.is_frobenius && r.s_formula_ok;
            let mut text = format!("{}\n", verdict(ok));
            match &r.kernel {
                Some(k) => {
                    let gens: Vec<String> =
                        k.generators().iter().map(ToString::to_string).collect();
                    writeln!(
                        text,
                        "kernel: order {} generated by {}",
                        k.order(),
                        gens.join(", ")
                    )
                    .unwrap();
                }
                None => text.push_str("kernel: none\n"),
            }
            if let Some(x) = &r.intersection_witness {
                writeln!(text, "H meets its conjugate by {x}").unwrap();
            }
            writeln!(text, "double cosets: {}", r.double_cosets).unwrap();
            writeln!(text, "S formula: {}", yes(r.s_formula_ok)).unwrap();
            (ok, text, r.to_json())
        }
        Check::Mackey => {
            expect_groups(check, groups, 3)?;
            let g = group(&groups[0])?;
            let n = subgroup(&g, &groups[1])?;
            let h = subgroup(&g, &groups[2])?;
            g.check_bound()?;
            let t = character_table(&h)?;
            let mut ok = true;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, psi) in t.rows().iter().enumerate() {
                let r = mackey_check(&g, &n, &h, psi)?;
                ok &= r.holds;
                writeln!(
                    text,
                    "ψ{}: {} ({} double cosets)",
                    i + 1,
                    verdict(r.holds),
                    r.double_cosets
                )
                .unwrap();
                rows.push(
                    json!({"psi": i + 1, "holds": r.holds, "double_cosets": r.double_cosets}),
                );
            }
            text.insert_str(0, &format!("{}\n", verdict(ok)));
            (ok, text, json!({"pass": ok, "characters": rows}))
        }
        Check::D2qb | Check::D3qb => {
            expect_groups(check, groups, 2)?;
            let g = group(&groups[0])?;
            let n = subgroup(&g, &groups[1])?;
            g.check_bound()?;
            let r = if check == Check::D2qb {
                verify_d2_quasibases(&g, &n)?
            } else {
                verify_d3_from_d2(&g, &n)?
            };
            let mut text = format!("{}\n", verdict(r.holds()));
            writeln!(
                text,
                "identity over {} pairs: {}",
                r.pairs_checked,
                yes(r.identity)
            )
            .unwrap();
            if let Some((x, y)) = &r.counterexample {
                writeln!(text, "  fails at x = {x}, y = {y}").unwrap();
            }
            writeln!(text, "B-central: {}", yes(r.central)).unwrap();
            if let Some((i, b)) = &r.central_failure {
                writeln!(text, "  quasi-basis {} does not commute with {b}", i + 1).unwrap();
            }
            if check == Check::D2qb {
                writeln!(text, "bimodule maps: {}", yes(r.bimodule)).unwrap();
                if let Some((i, b, c, a)) = &r.bimodule_failure {
                    writeln!(text, "  map {} fails at b = {b}, b' = {c}, a = {a}", i + 1).unwrap();
                }
            }
            (r.holds(), text, r.to_json())
        }
        Check::TowerEquiv => {
            expect_groups(check, groups, 3)?;
            let g = group(&groups[0])?;
            let n = subgroup(&g, &groups[1])?;
            let h = subgroup(&n, &groups[2])?;
            g.check_bound()?;
            let r = tower_core_equivalence(&g, &n, &h)?;
            let text = format!(
                "{}\nmatrix d3: {}\ncore contains subgroup: {}\n",
                verdict(r.agree()),
                yes(r.matrix_d3),
                yes(r.core_contains)
            );
            (r.agree(), text, r.to_json())
        }
        Check::Separability => {
            expect_groups(check, groups, 2)?;
            let g = group(&groups[0])?;
            let h = subgroup(&g, &groups[1])?;
            g.check_bound()?;
            let f = check_frobenius_system(&g, &h)?;
            let s = check_separability(&g, &h)?;
            let ok = f.holds && s.holds();
            let text = format!(
                "{}\ndual bases: {}\nseparability element central: {}\nmultiplies to 1: {}\n",
                verdict(ok),
                yes(f.holds),
                yes(s.central),
                yes(s.multiplies_to_one)
            );
            (
                ok,
                text,
                json!({"pass": ok, "frobenius_system": f.to_json(), "separability": s.to_json()}),
            )
        }
    };
    let text = if json { pretty(&value) } else { text };
    Ok(Output { text, pass: ok })
}

fn bratteli(g: &str, h: &str) -> Outcome {
    let p = pair(g, h)?;
    let inc = p.inclusion_matrix()?;
    pass(bratteli_dot(
        inc.entries(),
        inc.row_labels(),
        inc.col_labels(),
    )?)
}
