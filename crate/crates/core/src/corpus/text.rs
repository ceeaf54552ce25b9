//! Tokenization, contraction expansion, and stopword removal.
//!
//! The tables these functions consult are bundled with the crate so the
//! normalization chain is identical on every machine.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use super::TokenList;

const STOPWORDS_TXT: &str = include_str!("data/stopwords.txt");
const CONTRACTIONS_TSV: &str = include_str!("data/contractions.tsv");

fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| {
        STOPWORDS_TXT
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect()
    })
}

fn contractions() -> &'static HashMap<&'static str, Vec<&'static str>> {
    static MAP: OnceLock<HashMap<&'static str, Vec<&'static str>>> = OnceLock::new();
    MAP.get_or_init(|| {
        CONTRACTIONS_TSV
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let (key, expansion) = l
                    .split_once('\t')
                    .expect("contraction table rows are key<TAB>expansion");
                (key, expansion.split_whitespace().collect())
            })
            .collect()
    })
}

/// Characters that belong to a token; everything else separates tokens.
fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '-'
}

/// Splits text into lowercase tokens.
///
/// A token is a maximal run of letters, digits, apostrophes, and hyphens
/// containing at least one letter or digit; runs of bare punctuation are
/// dropped. Lowercasing happens before run extraction so that
/// `tokenize(lowercase(t)) == tokenize(t)`.
pub fn tokenize(text: &str) -> TokenList {
    let lowered = text.to_lowercase();
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut flush = |current: &mut String| {
        if current.chars().any(char::is_alphanumeric) {
            tokens.push(std::mem::take(current));
        } else {
            current.clear();
        }
    };
    for c in lowered.chars() {
        if is_token_char(c) {
            current.push(c);
        } else {
            flush(&mut current);
        }
    }
    flush(&mut current);
    TokenList::new(tokens)
}

/// Replaces every token found in the bundled contraction table by its
/// multi-token expansion ("can't" becomes "can not"); other tokens pass
/// through unchanged.
pub fn expand_contractions(tokens: &TokenList) -> TokenList {
    let table = contractions();
    let mut out = Vec::with_capacity(tokens.len());
    for token in tokens.iter() {
        match table.get(token) {
            Some(expansion) => out.extend(expansion.iter().map(|t| t.to_string())),
            None => out.push(token.to_string()),
        }
    }
    TokenList::new(out)
}

/// Drops tokens present in the bundled stopword list, preserving order.
pub fn remove_stopwords(tokens: &TokenList) -> TokenList {
    TokenList::new(
        tokens
            .iter()
            .filter(|t| !is_stopword(t))
            .map(str::to_string)
            .collect(),
    )
}

/// True if the token is in the bundled stopword list.
pub fn is_stopword(token: &str) -> bool {
    stopwords().contains(token)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(list: &TokenList) -> Vec<&str> {
        list.iter().collect()
    }

    #[test]
    fn tokenize_keeps_apostrophes_and_digits() {
        let t = tokenize("Sasol's profit DROPS 20%");
        assert_eq!(toks(&t), ["sasol's", "profit", "drops", "20"]);
    }

    #[test]
    fn tokenize_empty_is_empty() {
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_comma_separated_headline() {
        let t = tokenize("rand firms as dollar, stocks fall");
        assert_eq!(toks(&t), ["rand", "firms", "as", "dollar", "stocks", "fall"]);
    }

    #[test]
    fn tokenize_drops_bare_punctuation_runs() {
        let t = tokenize("Aveng execs - Moneyweb");
        assert_eq!(toks(&t), ["aveng", "execs", "moneyweb"]);
    }

    #[test]
    fn expand_cant_to_can_not() {
        let t = expand_contractions(&TokenList::from(vec!["can't"]));
        assert_eq!(toks(&t), ["can", "not"]);
    }

    #[test]
    fn expand_leaves_plain_tokens() {
        let t = expand_contractions(&TokenList::from(vec!["profit"]));
        assert_eq!(toks(&t), ["profit"]);
    }

    #[test]
    fn expand_wont_and_its() {
        let t = expand_contractions(&TokenList::from(vec!["won't", "it's"]));
        assert_eq!(toks(&t), ["will", "not", "it", "is"]);
    }

    #[test]
    fn stopwords_removed_in_order() {
        let t = remove_stopwords(&TokenList::from(vec!["the", "price", "of", "oil"]));
        assert_eq!(toks(&t), ["price", "oil"]);
    }

    #[test]
    fn stopwords_empty_identity() {
        assert!(remove_stopwords(&TokenList::default()).is_empty());
    }

    #[test]
    fn stopword_as_is_removed() {
        assert!(is_stopword("as"));
        let t = remove_stopwords(&TokenList::from(vec!["as", "profit", "falls"]));
        assert_eq!(toks(&t), ["profit", "falls"]);
    }
}
