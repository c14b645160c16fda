use kgamma::gamma::{antipode, basis_coproduct, multiply, pieri_product, skew_expansion, sslash_element, GammaElement};
use kgamma::grassmann::{
    dual_pairing, dual_pairing_direct, k_multiply, triple_intersection, GrassmannContext, KClass,
};
use kgamma::insertion::{insert_set, multiply_column, Guard};
use kgamma::oracle::{alpha_w, double_g, stable_limit, svt_polynomial};
use kgamma::tableaux::SetValuedTableau;
use kgamma::verify::{run_suite, Bounds, Status};
use kgamma::{Error, Result};

use crate::output::{Cell, Document};
use crate::{Cli, Command};

/// Runs a parsed command. The flag is false when a check in the command
/// found a violation.
pub fn run(cli: &Cli) -> Result<(Document, bool)> {
    let (p, q, cap) = (cli.vars, cli.yvars, cli.deg);
    let doc = match &cli.command {
        Command::Mult { lambda, mu } => {
            let prod = multiply(&GammaElement::basis(lambda.clone()), &GammaElement::basis(mu.clone()))?;
            expansion("mult", &prod)
        }
        Command::Coprod { nu } => {
            let mut doc = Document::new("coprod").columns(&["left", "right", "coeff"]);
            for (l, m, c) in basis_coproduct(nu)?.terms() {
                doc.row(vec![Cell::Partition(l.clone()), Cell::Partition(m.clone()), Cell::Int(c)]);
            }
            doc
        }
        Command::Skew { shape } => expansion("skew", &skew_expansion(shape)?),
        Command::Sslash { nu, lambda } => expansion("sslash", &sslash_element(nu, lambda)?),
        Command::Pieri { lambda, len } => expansion("pieri", &pieri_product(lambda, *len)?),
        Command::Stable { w } => {
            let poly = stable_limit(w, p, cap)?;
            let alpha = alpha_w(w, cap)?;
            expansion("stable", &alpha.element).scalar("polynomial", Cell::Text(poly.to_string()))
        }
        Command::Poly { shape, double } => {
            let poly = if *double {
                if !shape.is_straight() {
                    return Err(Error::Domain("double polynomials need a straight shape".into()));
                }
                double_g(shape.outer(), p, q, cap)?
            } else {
                svt_polynomial(shape, p, cap)?
            };
            Document::new("poly").scalar("value", Cell::Text(poly.to_string()))
        }
        Command::Grmult { d, n, lambda, mu } => {
            let ctx = GrassmannContext::new(*d, *n)?;
            let prod = k_multiply(&KClass::schubert(&ctx, lambda)?, &KClass::schubert(&ctx, mu)?)?;
            expansion("grmult", prod.element())
        }
        Command::Tripleint { d, n, lambda, mu, nu } => {
            let ctx = GrassmannContext::new(*d, *n)?;
            Document::new("tripleint").scalar("value", Cell::Int(triple_intersection(lambda, mu, nu, &ctx)?))
        }
        Command::Dualcheck { d, n } => return dualcheck(*d, *n),
        Command::Antipode { lambda } => expansion("antipode", &antipode(&GammaElement::basis(lambda.clone()), cap)?.element),
        Command::Insert { column, tableau } => insert(column, tableau)?,
        Command::Verify { suite, max_weight, max_entry } => {
            return verify(suite, Bounds { max_weight: *max_weight, max_entry: *max_entry })
        }
    };
    Ok((doc, true))
}

fn expansion(command: &'static str, e: &GammaElement) -> Document {
    let mut doc = Document::new(command).columns(&["partition", "coeff"]);
    for (l, c) in e.terms() {
        doc.row(vec![Cell::Partition(l.clone()), Cell::Int(c)]);
    }
    doc
}

fn dualcheck(d: usize, n: usize) -> Result<(Document, bool)> {
    let ctx = GrassmannContext::new(d, n)?;
    let idx = ctx.schubert_indices();
    let mut doc = Document::new("dualcheck").columns(&["lambda", "mu", "pairing", "direct"]);
    let mut ok = true;
    let mut pairs = 0i64;
    for l in &idx {
        for m in &idx {
            let fast = dual_pairing(l, m, &ctx)?;
            let direct = dual_pairing_direct(l, m, &ctx)?;
            let expected = i64::from(ctx.dual(l)? == *m);
            ok &= fast == expected && direct == expected;
            if fast != 0 || direct != 0 {
                doc.row(vec![Cell::Partition(l.clone()), Cell::Partition(m.clone()), Cell::Int(fast), Cell::Int(direct)]);
            }
            pairs += 1;
        }
    }
    Ok((doc.scalar("pairs", Cell::Int(pairs)).scalar("ok", Cell::Bool(ok)), ok))
}

fn insert(column: &SetValuedTableau, tableau: &SetValuedTableau) -> Result<Document> {
    let cols = column.columns();
    if !column.shape().is_straight() || cols.len() != 1 {
        return Err(Error::InvalidTableau(format!("{} is not a single column", column)));
    }
    let boxes = &cols[0];
    let product = multiply_column(boxes, tableau)?;
    let mut doc = Document::new("insert").columns(&["step", "column", "inserted", "rules", "ejected"]);
    let mut lines = Vec::new();
    let mut current = tableau.columns();
    for (step, &x) in boxes.iter().enumerate() {
        let mut y = x;
        let mut i = 0;
        loop {
            if i == current.len() {
                current.push(vec![y]);
                lines.push(format!("step {} column {}: {} starts a new column", step + 1, i + 1, y));
                doc.row(trace_row(step, i, &y.to_string(), "new", ""));
                break;
            }
            let out = insert_set(y, Guard::Infinity, &current[i]);
            let rules: Vec<String> = out.rules.iter().map(|r| r.to_string()).collect();
            let ejected = if out.ejected.is_empty() { String::new() } else { out.ejected.to_string() };
            lines.push(format!(
                "step {} column {}: insert {} by {}{}",
                step + 1,
                i + 1,
                y,
                rules.join(" "),
                if ejected.is_empty() { String::new() } else { format!(", eject {}", ejected) }
            ));
            doc.row(trace_row(step, i, &y.to_string(), &rules.join(" "), &ejected));
            current[i] = out.column;
            y = out.ejected;
            if y.is_empty() {
                break;
            }
            i += 1;
        }
    }
    let marks: Vec<usize> = product.marks.iter().map(|m| m + 1).collect();
    doc.text_rows(lines);
    Ok(doc
        .scalar("product", Cell::Text(product.tableau.to_string()))
        .scalar("shape", Cell::Partition(product.tableau.shape().outer().clone()))
        .scalar("marks", Cell::List(marks)))
}

fn trace_row(step: usize, col: usize, inserted: &str, rules: &str, ejected: &str) -> Vec<Cell> {
    vec![
        Cell::Int(step as i64 + 1),
        Cell::Int(col as i64 + 1),
        Cell::Text(inserted.into()),
        Cell::Text(rules.into()),
        Cell::Text(ejected.into()),
    ]
}

fn verify(suite: &str, bounds: Bounds) -> Result<(Document, bool)> {
    let results = run_suite(suite, &bounds)?;
    let mut doc = Document::new("verify").columns(&["suite", "check", "status", "cases", "detail"]);
    let mut lines = Vec::new();
    let mut failed = 0i64;
    for r in &results {
        let (status, detail) = match &r.status {
            Status::Pass => ("PASS", String::new()),
            Status::Fail(why) => ("FAIL", why.clone()),
            Status::Report(text) => ("REPORT", text.clone()),
        };
        failed += i64::from(r.failed());
        let tail = if detail.is_empty() { String::new() } else { format!(": {}", detail) };
        lines.push(format!("{} {}/{} ({} cases){}", status, r.suite, r.name, r.cases, tail));
        doc.row(vec![
            Cell::Text(r.suite.into()),
            Cell::Text(r.name.into()),
            Cell::Text(status.into()),
            Cell::Int(r.cases as i64),
            Cell::Text(detail),
        ]);
    }
    doc.text_rows(lines);
    let doc = doc.scalar("failed", Cell::Int(failed));
    Ok((doc, failed == 0))
}
