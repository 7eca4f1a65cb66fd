// SPDX-License-Identifier: Apache-2.0
use std::fmt::Write as _;

use diracconst::constants::{closed_form_symbol, constant_closed_form, constant_report, levi_data, Method, RunOptions};
use diracconst::orbits::{dominant, orbit_partition, real_forms as list_forms, weighted_dynkin, RealForm, SignedTableau};
use diracconst::report::{CaseJson, CaseReport};
use diracconst::{GroupCase, Result, Weight};
use serde_json::json;

use crate::Format;

/// h with a bar between the two blocks of the (p, q) families.
pub fn h_string(case: &GroupCase, h: &Weight) -> String {
    let s = h.to_strings();
    match case.params().as_slice() {
        [("p", p), _] => format!("({}|{})", s[..*p].join(","), s[*p..].join(",")),
        _ => format!("({})", s.join(",")),
    }
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Math-mode text: exponents and subscripts get braces, `SO*` becomes `SO^*`.
fn tex(s: &str) -> String {
    let s = s.replace(",R)", ",\\mathbb{R})");
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' || (c == 'h' && chars.peek().is_some_and(char::is_ascii_digit)) {
            if c == 'h' {
                out.push('_');
            }
            let mut arg = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() && !(c == 'h' && !d.is_ascii_digit()) {
                    arg.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push_str(&format!("{{{arg}}}"));
        }
    }
    out.replace("SO*", "SO^*")
}

fn tt(s: &str) -> String {
    let s = s.replace('^', "\\textasciicircum{}").replace('_', "\\_");
    format!("\\texttt{{{s}}}")
}

fn latex_tabular(cols: &str, header: &[&str], groups: &[(String, Vec<Vec<String>>)]) -> String {
    let width = header.len();
    let mut s = format!("\\begin{{tabular}}{{{cols}}}\n\\hline\n{} \\\\\n\\hline\n", header.join(" & "));
    for (title, rows) in groups {
        if !title.is_empty() {
            let _ = writeln!(s, "\\multicolumn{{{width}}}{{l}}{{{title}}} \\\\");
        }
        for r in rows {
            let _ = writeln!(s, "{} \\\\", r.join(" & "));
        }
        s.push_str("\\hline\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn dynkin(case: &GroupCase, forms: &[RealForm]) -> Result<Vec<i64>> {
    let lie = case.lie_type();
    match forms.first() {
        Some(f) => weighted_dynkin(lie, &dominant(lie, &f.h)),
        None => Ok(Vec::new()),
    }
}

fn tableau_rows(t: &Option<SignedTableau>) -> Vec<String> {
    t.as_ref().map(|t| t.render().lines().map(str::to_string).collect()).unwrap_or_default()
}

pub fn real_forms(case: &GroupCase, forms: &[RealForm], format: Format) -> Result<String> {
    let labels = dynkin(case, forms)?;
    let orbit = orbit_partition(case);
    let n_of = |f: &RealForm| levi_data(case, &f.h).map(|l| l.big_n);
    Ok(match format {
        Format::Text => {
            let mut s = format!(
                "{case}: {} real forms of the orbit {orbit}\nweighted Dynkin labels: {}\n",
                forms.len(),
                labels.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
            );
            for f in forms {
                let _ = writeln!(s, "\nform {}  {}  h = {}  N = {}", f.index, f.label, h_string(case, &f.h), n_of(f)?);
                for line in tableau_rows(&f.tableau) {
                    let _ = writeln!(s, "  {line}");
                }
            }
            s
        }
        Format::Json => {
            let forms_json = forms
                .iter()
                .map(|f| {
                    Ok(json!({
                        "index": f.index,
                        "label": f.label,
                        "h": f.h,
                        "N": n_of(f)?,
                        "exists": f.exists_condition,
                        "tableau": tableau_rows(&f.tableau),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let doc = json!({
                "case": CaseJson::of(case),
                "orbit": orbit.to_string(),
                "dynkin": labels,
                "forms": forms_json,
            });
            serde_json::to_string_pretty(&doc).expect("json")
        }
        Format::Csv => {
            let rows = forms
                .iter()
                .map(|f| {
                    Ok(vec![
                        f.index.to_string(),
                        f.label.clone(),
                        h_string(case, &f.h),
                        n_of(f)?.to_string(),
                        f.tableau.as_ref().map(|t| t.summary()).unwrap_or_default(),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            csv_string(&["index", "label", "h", "N", "tableau"], &rows)
        }
        Format::Latex => {
            let rows = forms
                .iter()
                .map(|f| {
                    Ok(vec![
                        f.index.to_string(),
                        format!("${}$", tex(&f.label)),
                        format!("${}$", h_string(case, &f.h)),
                        n_of(f)?.to_string(),
                        tt(&f.tableau.as_ref().map(|t| t.summary()).unwrap_or_default()),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            latex_tabular("rllrl", &["Form", "Label", "$h$", "$N$", "Tableau"], &[(format!("${}$", tex(&case.to_string())), rows)])
        }
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn constants(case: &GroupCase, doc: &CaseReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let mut s = format!("{case}\n");
            for f in &doc.forms {
                let _ = write!(s, "form {} ({})  h = {}  N = {}", f.index, f.label, h_string(case, &f.h), f.n);
                if let (Some(sym), Some(c)) = (&f.closed_form, f.c_closed) {
                    let _ = write!(s, "  cClosed = {c}  [{sym}]");
                }
                if let Some(b) = f.c_brute {
                    let _ = write!(
                        s,
                        "  cBrute = {b}  ({} λ, {} terms, {} nonzero at λ₀)",
                        f.lambda_used.len(),
                        opt(f.terms),
                        opt(f.survivors)
                    );
                    if f.c_brute_all.iter().any(|&v| v != b) {
                        let _ = write!(s, "  values {:?}", f.c_brute_all);
                    }
                }
                match f.agree {
                    Some(true) => s.push_str("  agree"),
                    Some(false) => s.push_str("  DISAGREE"),
                    None => {}
                }
                s.push('\n');
            }
            s
        }
        Format::Json => doc.to_json(),
        Format::Csv => {
            let rows: Vec<Vec<String>> = doc
                .forms
                .iter()
                .map(|f| {
                    vec![
                        f.index.to_string(),
                        f.label.clone(),
                        h_string(case, &f.h),
                        f.n.to_string(),
                        opt(f.c_closed),
                        opt(f.c_brute),
                        opt(f.agree),
                        opt(f.terms),
                        opt(f.survivors),
                    ]
                })
                .collect();
            csv_string(&["index", "label", "h", "N", "cClosed", "cBrute", "agree", "terms", "survivors"], &rows)
        }
        Format::Latex => {
            let rows: Vec<Vec<String>> = doc
                .forms
                .iter()
                .map(|f| {
                    vec![
                        f.index.to_string(),
                        format!("${}$", h_string(case, &f.h)),
                        f.n.to_string(),
                        opt(f.c_closed),
                        opt(f.c_brute),
                    ]
                })
                .collect();
            latex_tabular(
                "rlrrr",
                &["Form", "$h$", "$N$", "Closed", "Brute force"],
                &[(format!("${}$", tex(&case.to_string())), rows)],
            )
        }
    })
}

struct TableRow {
    index: usize,
    label: String,
    h: String,
    symbol: String,
    value: i64,
}

fn table_rows(case: &GroupCase) -> Result<Vec<TableRow>> {
    list_forms(case)?
        .iter()
        .map(|f| {
            Ok(TableRow {
                index: f.index,
                label: f.label.clone(),
                h: h_string(case, &f.h),
                symbol: closed_form_symbol(case, f.index)?,
                value: constant_closed_form(case, f.index)?,
            })
        })
        .collect()
}

pub fn table(cases: &[GroupCase], format: Format) -> Result<String> {
    let all = cases.iter().map(|c| Ok((*c, table_rows(c)?))).collect::<Result<Vec<_>>>()?;
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for (case, rows) in &all {
                let _ = writeln!(s, "{case}  orbit {}", orbit_partition(case));
                let hw = rows.iter().map(|r| r.h.chars().count()).max().unwrap_or(0);
                let lw = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0);
                for r in rows {
                    let _ = writeln!(
                        s,
                        "  {:>2}  {:<lw$}  {:<hw$}  {:>6}   {}",
                        r.index,
                        r.label,
                        r.h,
                        r.value,
                        r.symbol,
                        lw = lw,
                        hw = hw
                    );
                }
            }
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = all
                .iter()
                .flat_map(|(case, rows)| {
                    rows.iter().map(move |r| {
                        vec![
                            case.to_string(),
                            r.index.to_string(),
                            r.label.clone(),
                            r.h.clone(),
                            r.symbol.clone(),
                            r.value.to_string(),
                        ]
                    })
                })
                .collect();
            csv_string(&["group", "form", "label", "h", "closed_form", "constant"], &rows)
        }
        Format::Json => {
            let docs = cases
                .iter()
                .map(|c| {
                    let reports = (1..=list_forms(c)?.len())
                        .map(|i| constant_report(c, i, Method::Closed, &RunOptions::default()))
                        .collect::<Result<Vec<_>>>()?;
                    CaseReport::new(c, &reports)
                })
                .collect::<Result<Vec<_>>>()?;
            if docs.len() == 1 {
                docs[0].to_json()
            } else {
                serde_json::to_string_pretty(&docs).expect("json")
            }
        }
        Format::Latex => {
            let groups: Vec<(String, Vec<Vec<String>>)> = all
                .iter()
                .map(|(case, rows)| {
                    let title = format!("${}$, orbit ${}$", tex(&case.to_string()), tex(&orbit_partition(case).to_string()));
                    let body = rows
                        .iter()
                        .map(|r| {
                            vec![
                                format!("${}$", tex(&r.label)),
                                format!("${}$", r.h),
                                tt(&r.symbol),
                                format!("${}$", r.value),
                            ]
                        })
                        .collect();
                    (title, body)
                })
                .collect();
            latex_tabular("llll", &["Real form", "$h$", "Closed form", "Constant"], &groups)
        }
    })
}
