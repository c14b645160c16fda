use kgamma::shapes::Partition;
use serde_json::{Map, Value};

/// A single value in an output row.
#[derive(Clone, Debug)]
pub enum Cell {
    Partition(Partition),
    Int(i64),
    /// Printed comma-separated, or `none` when empty.
    List(Vec<usize>),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Partition(p) => p.to_string(),
            Cell::Int(x) => x.to_string(),
            Cell::List(v) if v.is_empty() => "none".into(),
            Cell::List(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Partition(p) => Value::from(p.parts().to_vec()),
            Cell::Int(x) => Value::from(*x),
            Cell::List(v) => Value::from(v.clone()),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// The result of one command: named scalars followed by a table.
///
/// In text mode a scalar named `value` prints bare, other scalars print as
/// `name: value`, and each row prints its cells separated by spaces.
#[derive(Clone, Debug)]
pub struct Document {
    command: &'static str,
    scalars: Vec<(&'static str, Cell)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Replaces the generic row rendering in text mode.
    text_rows: Option<Vec<String>>,
}

impl Document {
    pub fn new(command: &'static str) -> Self {
        Self { command, scalars: Vec::new(), columns: Vec::new(), rows: Vec::new(), text_rows: None }
    }

    pub fn scalar(mut self, name: &'static str, value: Cell) -> Self {
        self.scalars.push((name, value));
        self
    }

    pub fn columns(mut self, names: &[&'static str]) -> Self {
        self.columns = names.to_vec();
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn text_rows(&mut self, lines: Vec<String>) {
        self.text_rows = Some(lines);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (name, v) in &self.scalars {
            if *name == "value" {
                out.push_str(&v.text());
            } else {
                out.push_str(&format!("{}: {}", name, v.text()));
            }
            out.push('\n');
        }
        if let Some(lines) = &self.text_rows {
            for line in lines {
                out.push_str(line);
                out.push('\n');
            }
            return out;
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::text).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::from(self.command));
        for (name, v) in &self.scalars {
            doc.insert((*name).into(), v.json());
        }
        if !self.columns.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        self.columns.iter().zip(row).map(|(k, c)| ((*k).to_string(), c.json())).collect();
                    Value::Object(obj)
                })
                .collect();
            doc.insert("rows".into(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}
