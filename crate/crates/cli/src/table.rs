use std::fmt::Write;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Markdown,
    Tsv,
}

/// A titled table of preformatted cells.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: Option<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            title: None,
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: Format, out: &mut String) {
        match format {
            Format::Markdown => self.render_markdown(out),
            Format::Tsv => self.render_tsv(out),
        }
    }

    fn render_markdown(&self, out: &mut String) {
        if let Some(title) = &self.title {
            writeln!(out, "## {title}\n").unwrap();
        }
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.header[c].chars().count(), 3])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            format!("| {} |", padded.join(" | "))
        };
        writeln!(out, "{}", line(&self.header)).unwrap();
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(out, "|-{}-|", rule.join("-|-")).unwrap();
        for row in &self.rows {
            writeln!(out, "{}", line(row)).unwrap();
        }
    }

    fn render_tsv(&self, out: &mut String) {
        if let Some(title) = &self.title {
            writeln!(out, "# {title}").unwrap();
        }
        writeln!(out, "{}", self.header.join("\t")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.replace(['\t', '\n'], " ")).collect();
            writeln!(out, "{}", cells.join("\t")).unwrap();
        }
    }
}

pub fn render_all(tables: &[Table], format: Format) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        t.render(format, &mut out);
    }
    out
}
