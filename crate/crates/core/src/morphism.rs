//! Morphisms between small alphabets: application, classification, uniformity
//! and the synchronization test.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// A morphism given by one image word per source symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

/// Derived classification flags. `admissible` means non-erasing and distinct
/// from the identity; `neat` additionally excludes the binary complementary
/// morphism 0↦1, 1↦0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismClass {
    pub erasing: bool,
    pub identity: bool,
    pub complementary: bool,
    pub admissible: bool,
    pub neat: bool,
}

impl MorphismClass {
    pub fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.erasing {
            out.push("erasing");
        }
        if self.identity {
            out.push("identity");
        }
        if self.complementary {
            out.push("complementary");
        }
        if self.admissible {
            out.push("admissible");
        }
        if self.neat {
            out.push("neat");
        }
        out
    }
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Morphism> {
        if images.len() != source.size() {
            return Err(Error::Parse(format!(
                "expected {} images, got {}",
                source.size(),
                images.len()
            )));
        }
        for img in &images {
            for &s in img.symbols() {
                if !target.contains(s) {
                    return Err(Error::SymbolOutOfRange { symbol: s, size: target.size() });
                }
            }
        }
        Ok(Morphism { source, target, images })
    }

    /// Binary-to-binary morphism from raw image slices.
    pub fn binary(image0: &[u8], image1: &[u8]) -> Result<Morphism> {
        Morphism::new(
            Alphabet::BINARY,
            Alphabet::BINARY,
            vec![
                Word::new(Alphabet::BINARY, image0.to_vec())?,
                Word::new(Alphabet::BINARY, image1.to_vec())?,
            ],
        )
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn image(&self, symbol: u8) -> &Word {
        &self.images[symbol as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Concatenates the images of the symbols of `w`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut symbols = Vec::with_capacity(self.apply_len(w.symbols()));
        for &s in w.symbols() {
            if !self.source.contains(s) {
                return Err(Error::SymbolOutOfRange { symbol: s, size: self.source.size() });
            }
            symbols.extend_from_slice(self.images[s as usize].symbols());
        }
        Word::new(self.target, symbols)
    }

    pub(crate) fn apply_len(&self, symbols: &[u8]) -> usize {
        symbols
            .iter()
            .map(|&s| self.images.get(s as usize).map_or(0, Word::len))
            .sum()
    }

    /// The common image length, when every image has one.
    pub fn uniform_width(&self) -> Option<usize> {
        let q = self.images.first()?.len();
        self.images.iter().all(|img| img.len() == q).then_some(q)
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(Word::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, img)| img.symbols() == [i as u8])
    }

    pub fn is_complementary(&self) -> bool {
        self.source == Alphabet::BINARY
            && self.target == Alphabet::BINARY
            && self.images[0].symbols() == [1]
            && self.images[1].symbols() == [0]
    }

    pub fn classify(&self) -> MorphismClass {
        let erasing = self.is_erasing();
        let identity = self.is_identity();
        let complementary = self.is_complementary();
        let admissible = !erasing && !identity;
        MorphismClass {
            erasing,
            identity,
            complementary,
            admissible,
            neat: admissible && !complementary,
        }
    }

    /// Synchronization test: for all source symbols a, b, c, every occurrence
    /// of image(c) inside image(a)·image(b) must be flush left with a = c or
    /// flush right with b = c. Erasing morphisms are rejected.
    pub fn is_synchronizing(&self) -> Result<bool> {
        let scan = self.scan_synchronization()?;
        Ok(scan.flush_mismatches.is_empty() && scan.straddles.is_empty())
    }

    /// Full classification of image occurrences inside two-block images:
    /// flush occurrences with the wrong boundary letter, and interior
    /// (straddling) occurrences. Both lists empty means synchronizing.
    pub fn scan_synchronization(&self) -> Result<SyncScan> {
        if self.is_erasing() {
            return Err(Error::Erasing);
        }
        let mut scan = SyncScan { flush_mismatches: Vec::new(), straddles: Vec::new() };
        let mut buf = Vec::new();
        for a in self.source.symbols() {
            for b in self.source.symbols() {
                buf.clear();
                buf.extend_from_slice(self.images[a as usize].symbols());
                buf.extend_from_slice(self.images[b as usize].symbols());
                for c in self.source.symbols() {
                    let img = self.images[c as usize].symbols();
                    if img.len() > buf.len() {
                        continue;
                    }
                    for pos in 0..=buf.len() - img.len() {
                        if &buf[pos..pos + img.len()] != img {
                            continue;
                        }
                        let occ = SyncOccurrence { left: a, right: b, image_of: c, offset: pos };
                        if pos == 0 || pos + img.len() == buf.len() {
                            let matched = (pos == 0 && a == c)
                                || (pos + img.len() == buf.len() && b == c);
                            if !matched {
                                scan.flush_mismatches.push(occ);
                            }
                        } else {
                            scan.straddles.push(occ);
                        }
                    }
                }
            }
        }
        Ok(scan)
    }

    /// Parses the one-line-per-symbol format:
    ///
    /// ```text
    /// # comment
    /// 0 -> 0001110101...
    /// 1 -> 0001110101...
    /// ```
    ///
    /// Blank lines and `#` comments are ignored. Symbols must be 0..k-1 with
    /// no duplicates; the target alphabet is the smallest one covering every
    /// image (at least binary).
    pub fn parse_text(text: &str) -> Result<Morphism> {
        let mut entries: Vec<(u8, String)> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (sym, img) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected 'SYMBOL -> IMAGE' in {line:?}")))?;
            let sym: u8 = sym
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad symbol in {line:?}")))?;
            entries.push((sym, img.trim().to_string()));
        }
        if entries.is_empty() {
            return Err(Error::EmptyInput("morphism text"));
        }
        entries.sort_by_key(|(s, _)| *s);
        let expected: Vec<u8> = (0..entries.len() as u8).collect();
        let got: Vec<u8> = entries.iter().map(|(s, _)| *s).collect();
        if got != expected {
            return Err(Error::Parse(format!("symbols must be 0..{}, got {got:?}", entries.len())));
        }
        Self::from_image_texts(&entries.iter().map(|(_, i)| i.as_str()).collect::<Vec<_>>())
    }

    /// Parses the compact slash form "IMAGE0/IMAGE1[/IMAGE2]".
    pub fn parse_compact(text: &str) -> Result<Morphism> {
        let parts: Vec<&str> = text.trim().split('/').collect();
        if parts.is_empty() || parts.len() > 3 {
            return Err(Error::Parse(format!("expected 1-3 images in {text:?}")));
        }
        Self::from_image_texts(&parts)
    }

    fn from_image_texts(texts: &[&str]) -> Result<Morphism> {
        let source = Alphabet::of_size(texts.len())?;
        let mut max_symbol = 1u8; // default to a binary target
        let mut images = Vec::with_capacity(texts.len());
        for t in texts {
            let img = Word::parse(Alphabet::TERNARY, t)?;
            max_symbol = max_symbol.max(img.symbols().iter().copied().max().unwrap_or(0));
            images.push(img);
        }
        let target = Alphabet::of_size(max_symbol as usize + 1)?;
        let images = images
            .into_iter()
            .map(|img| Word::new(target, img.symbols().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(source, target, images)
    }

    /// Renders the one-line-per-symbol file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, img) in self.images.iter().enumerate() {
            out.push_str(&format!("{i} -> {img}\n"));
        }
        out
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let texts: Vec<String> = self.images.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", texts.join("/"))
    }
}

/// One occurrence of image(image_of) inside image(left)·image(right) at
/// `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyncOccurrence {
    pub left: u8,
    pub right: u8,
    pub image_of: u8,
    pub offset: usize,
}

/// Result of scanning every two-block image for image occurrences that are
/// not flush at a matching boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncScan {
    pub flush_mismatches: Vec<SyncOccurrence>,
    pub straddles: Vec<SyncOccurrence>,
}
