//! Plain-text tables, LaTeX and Graphviz output.

use std::fmt::Write;

use eisenpole_core::characters::{b_matrix, chi_family, delta_coefficient, Convention};
use eisenpole_core::gkfactors::{residue_factor, DenominatorReport};
use eisenpole_core::identities::chains;
use eisenpole_core::poles::potential_poles;
use eisenpole_core::{fmt_q, AdmissibleData, IdentityConstant, PoleReport, RootDatum, Q};

use crate::appendix::AppendixProof;

/// First line of every E8 pole output.
pub const UNVERIFIED_BANNER: &str = "UNVERIFIED: E8 pole tables have no published reference to check against.";

/// Header note on every pole output.
pub const SPHERICAL_NOTE: &str = "Orders are those of the spherical section; the maximal order over all sections is not computed.";

/// `\frac{1}{4}`, `-\frac{1}{2}`, `3`.
pub fn q_latex(q: &Q) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else if *q.numer() < 0 {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// `E7(a5)` → `E_7(a_5)`.
pub fn orbit_latex(label: &str) -> String {
    let mut out = String::new();
    let mut prev_alpha = false;
    for ch in label.chars() {
        if ch.is_ascii_digit() && prev_alpha {
            let _ = write!(out, "_{}", ch);
        } else {
            out.push(ch);
        }
        prev_alpha = ch.is_ascii_alphabetic();
    }
    out
}

fn exponent_plain(v: &[Q]) -> String {
    format!("[{}]", v.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

fn exponent_latex(v: &[Q]) -> String {
    format!("\\left[{}\\right]", v.iter().map(q_latex).collect::<Vec<_>>().join(", "))
}

fn mark(b: bool) -> &'static str {
    if b {
        "\\ding{51}"
    } else {
        "\\ding{55}"
    }
}

/// Left-aligned columns separated by two spaces.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let n = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate().take(n) {
            width[k] = width[k].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, c) in cells.iter().enumerate() {
            if k + 1 == cells.len() {
                s.push_str(c);
            } else {
                let pad = width[k] - c.chars().count();
                s.push_str(c);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn matrix_plain(m: &[Vec<i64>]) -> String {
    let w = m.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut s = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>w$}", x, w = w)).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    s
}

fn matrix_latex(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

fn family_plain(datum: &RootDatum, i: usize, convention: Convention) -> String {
    let chi = chi_family(datum, i, convention);
    format!("({})", chi.coords().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
}

pub fn rootdata_table(datum: &RootDatum, convention: Convention) -> String {
    let mut s = String::new();
    let n = datum.rank();
    let _ = writeln!(
        s,
        "{}: rank {}, |W| = {}, {} positive roots",
        datum.cartan_type,
        n,
        datum.weyl_order(),
        datum.num_positive_roots()
    );
    let _ = writeln!(s, "Cartan matrix, entry (i, j) = <alpha_j, alpha_i^vee>:");
    s.push_str(&matrix_plain(&datum.cartan));
    let _ = writeln!(s, "B matrix:");
    s.push_str(&matrix_plain(&b_matrix(datum).entries));
    let _ = writeln!(s, "chi_(P,s) in the fundamental-weight basis, {} convention:", convention.name());
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| {
            vec![
                format!("P{}", i + 1),
                datum.coset_tree(datum.maximal_levi(i)).len().to_string(),
                delta_coefficient(datum, i).to_string(),
                family_plain(datum, i, convention),
                residue_factor(datum, i).plain(),
            ]
        })
        .collect();
    s.push_str(&columns(&["P", "|W(G,P)|", "b", "chi(s)", "A_wP"], &rows));
    s
}

pub fn rootdata_latex(datum: &RootDatum) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "% {}", datum.cartan_type);
    let _ = writeln!(s, "$$C = {}$$", matrix_latex(&datum.cartan));
    let _ = writeln!(s, "$$B = {}$$", matrix_latex(&b_matrix(datum).entries));
    let _ = writeln!(s, "\\begin{{align*}}");
    for i in 0..datum.rank() {
        let _ = writeln!(s, "A_{{w_{{P_{{{}}}}}}} &= {} \\\\", i + 1, residue_factor(datum, i).latex());
    }
    let _ = writeln!(s, "\\end{{align*}}");
    s
}

fn is_e8(group: &str) -> bool {
    group == "E8"
}

pub fn poles_table(reports: &[PoleReport]) -> String {
    let mut s = String::new();
    if reports.iter().any(|r| is_e8(&r.group)) {
        let _ = writeln!(s, "{}", UNVERIFIED_BANNER);
    }
    let _ = writeln!(s, "{}", SPHERICAL_NOTE);
    for r in reports {
        let _ = writeln!(s, "\n{} P{}  |W(G,P)| = {}", r.group, r.parabolic, r.cosets);
        let rows: Vec<Vec<String>> = r
            .poles()
            .map(|e| {
                let cert = if e.certified { "certified" } else { "upper bound" };
                vec![
                    fmt_q(&e.s0),
                    e.order.to_string(),
                    if e.square_integrable { "yes" } else { "no" }.to_string(),
                    e.orbit.clone().unwrap_or_else(|| "-".into()),
                    e.d_p.to_string(),
                    cert.to_string(),
                    if e.assumptions.is_empty() { "-".into() } else { e.assumptions.join("; ") },
                ]
            })
            .collect();
        s.push_str(&columns(&["s0", "order", "L2", "orbit", "d_P", "status", "assumes"], &rows));
    }
    s
}

/// One `tabular` per parabolic with rows "Pole order", "$L_2$", "Orbit"
/// over every potential pole.
pub fn poles_latex(reports: &[PoleReport]) -> String {
    let mut s = String::new();
    if reports.iter().any(|r| is_e8(&r.group)) {
        let _ = writeln!(s, "% {}", UNVERIFIED_BANNER);
    }
    let _ = writeln!(s, "% {}", SPHERICAL_NOTE);
    for r in reports {
        let cols = r.entries.len();
        let _ = writeln!(s, "\\begin{{tabular}}{{|c|{}}} \\hline", "c|".repeat(cols));
        let mut head = format!("$P_{{{}}}$", r.parabolic);
        let mut order = String::from("Pole order");
        let mut l2 = String::from("$L_2$");
        let mut orbit = String::from("Orbit");
        for e in &r.entries {
            let _ = write!(head, " & ${}$", q_latex(&e.s0));
            let _ = write!(order, " & ${}$", e.order);
            let _ = write!(l2, " & {}", mark(e.square_integrable));
            match &e.orbit {
                Some(o) => {
                    let _ = write!(orbit, " & ${}$", orbit_latex(o));
                }
                None => orbit.push_str(" & "),
            }
        }
        for row in [head, order, l2, orbit] {
            let _ = writeln!(s, "{} \\\\ \\hline", row);
        }
        let _ = writeln!(s, "\\end{{tabular}}");
    }
    s
}

/// Identity rows with their constants.
pub type IdentityRow = (AdmissibleData, IdentityConstant);

pub fn identities_table(rows: &[IdentityRow], with_constants: bool) -> String {
    let mut header = vec!["Pi", "s", "Pj", "t", "w", "h3", "dPi", "dPj", "d", "eps_p", "eps_q", "special"];
    if with_constants {
        header.push("constant");
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(a, c)| {
            let mut r = vec![
                format!("P{}", a.i + 1),
                fmt_q(&a.s0),
                format!("P{}", a.j + 1),
                fmt_q(&a.t0),
                a.w.compact(),
                c.h3.plain(),
                c.d_pi.to_string(),
                c.d_pj.to_string(),
                c.d.to_string(),
                fmt_q(&c.epsilon_s),
                fmt_q(&c.epsilon_t),
                if a.special { "yes" } else { "no" }.to_string(),
            ];
            if with_constants {
                r.push(c.plain());
            }
            r
        })
        .collect();
    columns(&header, &body)
}

pub fn identities_latex(rows: &[IdentityRow]) -> String {
    let mut s = String::from("\\begin{tabular}{|c|c|c|c|c|c|c|c|c|c|c|} \\hline\n");
    s.push_str("$P_i$ & $s$ & $P_j$ & $t$ & $w$ & $h_3$ & $d_{P_i}$ & $d_{P_j}$ & $d$ & $\\epsilon_p$ & $\\epsilon_q$ \\\\ \\hline\n");
    for (a, c) in rows {
        let _ = writeln!(
            s,
            "$P_{{{}}}$ & ${}$ & $P_{{{}}}$ & ${}$ & ${}$ & ${}$ & ${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\ \\hline",
            a.i + 1,
            q_latex(&a.s0),
            a.j + 1,
            q_latex(&a.t0),
            a.w.latex(),
            c.h3.latex(),
            c.d_pi,
            c.d_pj,
            c.d,
            q_latex(&c.epsilon_s),
            q_latex(&c.epsilon_t)
        );
    }
    s.push_str("\\end{tabular}\n");
    s
}

pub fn constants_latex(rows: &[IdentityRow]) -> String {
    let mut s = String::from("\\begin{align*}\n");
    for (a, c) in rows {
        let _ = writeln!(
            s,
            "\\mathcal{{E}}_{{P_{{{}}}}}\\left({}\\right) &= {} \\cdot \\mathcal{{E}}_{{P_{{{}}}}}\\left({}\\right) \\\\",
            a.i + 1,
            q_latex(&a.s0),
            c.latex(),
            a.j + 1,
            q_latex(&a.t0)
        );
    }
    s.push_str("\\end{align*}\n");
    s
}

/// Identity chains as a Graphviz graph, one cluster per chain.
pub fn identities_dot(group: &str, data: &[AdmissibleData]) -> String {
    let node = |p: usize, s: &Q| format!("\"P{} {}\"", p + 1, fmt_q(s));
    let mut out = format!("graph \"{} identities\" {{\n", group);
    for (k, chain) in chains(data).iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{} {{", k);
        for (p, s) in chain {
            let _ = writeln!(out, "    {};", node(*p, s));
        }
        let _ = writeln!(out, "  }}");
    }
    for d in data {
        let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", node(d.i, &d.s0), node(d.j, &d.t0), d.w.compact());
    }
    out.push_str("}\n");
    out
}

pub fn verify_table(reports: &[DenominatorReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "P{}  s0 = {}  cosets = {}  violations = {}",
            r.parabolic + 1,
            fmt_q(&r.s0),
            r.cosets,
            r.violations.len()
        );
        for v in &r.violations {
            let _ = writeln!(s, "  {}: zeta({}) at {}", v.word.compact(), v.argument, fmt_q(&v.value));
        }
    }
    s
}

fn y(k: usize) -> String {
    format!("y_{{{}}}", k + 1)
}

/// The proof document in LaTeX.
pub fn appendix_latex(p: &AppendixProof) -> String {
    let mut s = String::new();
    let e = &p.entry;
    let _ = writeln!(s, "\\begin{{thm}}");
    let _ = write!(
        s,
        "Let $G={}$ and $P=P_{{{}}}$. Then $E_P(f^0,g,s)$ admits a pole of order ${}$ at $s={}$.",
        orbit_latex(&p.group),
        p.parabolic,
        e.order,
        q_latex(&p.s0)
    );
    if e.order > 0 {
        let _ = write!(s, " The leading term is {}in $L^2$.", if e.square_integrable { "" } else { "not " });
    }
    s.push('\n');
    if !e.assumptions.is_empty() {
        let _ = writeln!(s, "This assumes {}.", e.assumptions.join(" and ").replace('ζ', "\\zeta").replace('≠', "\\neq"));
    }
    let _ = writeln!(s, "\\end{{thm}}\n\\begin{{proof}}");
    if p.classes.is_empty() {
        let _ = writeln!(s, "No element of $W(G,P)$ contributes a pole at $s={}$.", q_latex(&p.s0));
    }
    for c in &p.classes {
        let ex = exponent_latex(&c.exponent);
        match &c.expansion {
            None => {
                let _ = writeln!(
                    s,
                    "The exponent ${}$ contributes a pole of order ${}$ and it cannot be canceled.\\\\",
                    ex, c.order
                );
            }
            Some(x) => {
                let _ = writeln!(
                    s,
                    "For the exponent ${}$ we take the operators contributing a pole; {} of them contribute a pole of order ${}$. Let:",
                    ex, c.top_members, c.max_individual
                );
                let _ = writeln!(s, "\\begin{{align*}}");
                for (k, a) in x.symbols.iter().enumerate() {
                    let sep = if k + 1 == x.symbols.len() { "" } else if k % 4 == 3 { " \\\\" } else { " &" };
                    let _ = writeln!(s, "{}&=\\zeta({}){}", y(k), a, sep);
                }
                let _ = writeln!(s, "\\end{{align*}}");
                let num: Vec<String> =
                    x.summands.iter().map(|m| m.symbols.iter().map(|&k| y(k)).collect::<Vec<_>>().join(" ")).collect();
                let den: Vec<String> = x.denominator.iter().map(|&k| y(k)).collect();
                let den = if den.is_empty() { String::from("1") } else { den.join(" ") };
                let _ = writeln!(s, "Over a common denominator we get $$\\frac{{{}}}{{{}}}.$$", num.join(" + "), den);
                let _ = writeln!(
                    s,
                    "The denominator is holomorphic and nonzero at $s={}$. The Laurent expansions are",
                    q_latex(&p.s0)
                );
                let _ = writeln!(s, "\\begin{{align*}}");
                for (k, ser) in x.symbol_series.iter().enumerate() {
                    let _ = writeln!(s, "{} &= {} \\\\", y(k), ser.latex());
                }
                let _ = writeln!(s, "\\end{{align*}}");
                for (m, label) in x.summands.iter().zip(&num) {
                    let _ = writeln!(s, "For the summand ${}$ we get $${}$$", label, m.series.latex());
                }
                let _ = writeln!(s, "In conclusion the final sum is $${}.$$", x.total.latex());
                let _ = writeln!(s, "Hence this exponent contributes a pole of order at most ${}$.\\\\", c.order);
            }
        }
    }
    if e.order > 0 {
        let verdict = if e.square_integrable { "is" } else { "is not" };
        let _ = writeln!(s, "By Langlands' criterion the leading term {} square integrable.", verdict);
    }
    let _ = writeln!(s, "\\end{{proof}}\n");
    let _ = writeln!(s, "\\begin{{longtable}}{{|c|c|c|c|c|}}");
    let _ = writeln!(s, "\\hline pole & order & operator & factor & exp \\\\");
    let mut last: Option<&Vec<Q>> = None;
    for r in &p.rows {
        if last.is_some_and(|l| *l != r.exponent) || last.is_none() {
            s.push_str("\\hline ");
        }
        last = Some(&r.exponent);
        let _ = writeln!(
            s,
            "${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\",
            q_latex(&p.s0),
            r.order,
            r.word.latex(),
            r.factor.latex(),
            exponent_latex(&r.exponent)
        );
    }
    let _ = writeln!(s, "\\hline\n\\end{{longtable}}");
    if !p.complete_table {
        let _ = writeln!(s, "% only cosets whose factor has a pole are listed");
    }
    s
}

/// The proof summary and factor table as plain text.
pub fn appendix_table(p: &AppendixProof) -> String {
    let mut s = String::new();
    let e = &p.entry;
    let _ = writeln!(
        s,
        "{} P{} at s = {}: pole of order {}, L2 = {}",
        p.group,
        p.parabolic,
        fmt_q(&p.s0),
        e.order,
        if e.square_integrable { "yes" } else { "no" }
    );
    for a in &e.assumptions {
        let _ = writeln!(s, "assumes {}", a);
    }
    for c in &p.classes {
        let _ = write!(s, "exponent {}: individual order {}, class order {}", exponent_plain(&c.exponent), c.max_individual, c.order);
        if let Some(x) = &c.expansion {
            let _ = write!(s, ", sum {}", x.total.plain());
        }
        s.push('\n');
    }
    let rows: Vec<Vec<String>> = p
        .rows
        .iter()
        .map(|r| vec![r.order.to_string(), r.word.compact(), r.factor.plain(), exponent_plain(&r.exponent)])
        .collect();
    s.push_str(&columns(&["order", "operator", "factor", "exp"], &rows));
    s
}

/// Every potential pole of `P_i`, as used by `--point` validation.
pub fn candidate_list(datum: &RootDatum, i: usize) -> String {
    potential_poles(datum, i).iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}
