// SPDX-License-Identifier: Apache-2.0
//! JSON reports. Rationals are written as "a/b" strings so nothing is rounded.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constants::{closed_form_symbol, ConstantReport};
use crate::error::Result;
use crate::rootsys::{GroupCase, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub family: String,
    pub params: BTreeMap<String, usize>,
}

impl CaseJson {
    pub fn of(case: &GroupCase) -> Self {
        CaseJson {
            family: case.family().name().to_string(),
            params: case.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn to_case(&self) -> Result<GroupCase> {
        let family = self.family.parse()?;
        let get = |k: &str| self.params.get(k).copied();
        GroupCase::from_parts(family, get("p"), get("q"), get("n"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FormJson {
    pub index: usize,
    pub label: String,
    pub h: Weight,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_closed: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_brute: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub c_brute_all: Vec<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub lambda_used: Vec<Weight>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub survivors: Option<u64>,
}

impl FormJson {
    pub fn from_report(case: &GroupCase, r: &ConstantReport) -> Result<Self> {
        let brute = !r.c_brute_values.is_empty();
        Ok(FormJson {
            index: r.form.index,
            label: r.form.label.clone(),
            h: r.form.h.clone(),
            n: r.big_n,
            closed_form: match r.c_closed {
                Some(_) => Some(closed_form_symbol(case, r.form.index)?),
                None => None,
            },
            c_closed: r.c_closed,
            c_brute: r.c_brute(),
            c_brute_all: if r.c_brute_values.len() > 1 { r.c_brute_values.clone() } else { Vec::new() },
            lambda_used: r.lambda_used.clone(),
            agree: if brute && r.c_closed.is_some() { r.agree() } else { None },
            terms: brute.then_some(r.term_count),
            survivors: brute.then_some(r.surviving_term_count),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseJson,
    pub forms: Vec<FormJson>,
}

impl CaseReport {
    pub fn new(case: &GroupCase, reports: &[ConstantReport]) -> Result<Self> {
        Ok(CaseReport {
            case: CaseJson::of(case),
            forms: reports.iter().map(|r| FormJson::from_report(case, r)).collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// False if any form disagrees; None if nothing was compared.
    pub fn all_agree(&self) -> Option<bool> {
        let v: Vec<bool> = self.forms.iter().filter_map(|f| f.agree).collect();
        (!v.is_empty()).then(|| v.iter().all(|&b| b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{constant_report, Method, RunOptions};

    #[test]
    fn round_trip() {
        let case = GroupCase::so_odd(2, 2).unwrap();
        let opts = RunOptions { extra_lambdas: 1, ..Default::default() };
        let reports: Vec<_> = (1..=3).map(|i| constant_report(&case, i, Method::Both, &opts).unwrap()).collect();
        let doc = CaseReport::new(&case, &reports).unwrap();
        let s = doc.to_json();
        assert!(s.contains("\"family\": \"so-odd\""));
        assert!(s.contains("\"N\""));
        assert!(s.contains("\"cClosed\""));
        let back = CaseReport::from_json(&s).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.case.to_case().unwrap(), case);
    }

    #[test]
    fn closed_only_omits_brute_fields() {
        let case = GroupCase::sp(2).unwrap();
        let r = constant_report(&case, 1, Method::Closed, &RunOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(FormJson::from_report(&case, &r).unwrap()).unwrap();
        assert!(v.get("cBrute").is_none() && v.get("agree").is_none());
        assert_eq!(v["h"], serde_json::json!(["-1", "-1"]));
    }
}
