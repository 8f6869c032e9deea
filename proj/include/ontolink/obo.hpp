#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontolink/curie.hpp"

namespace ontolink {

// One ontology concept as parsed from a [Term] stanza.
struct TermRecord {
    Curie id;
    std::string name;
    bool obsolete = false;
    std::vector<Curie> parents;  // is_a targets, deduplicated, never id itself
};

// Side channel of parse_obo: what was dropped or could not be placed.
struct OboParseReport {
    std::size_t term_count = 0;      // [Term] stanzas accepted
    std::size_t obsolete_count = 0;
    std::size_t discarded_relationship_lines = 0;  // part_of and friends
    std::vector<Curie> unreachable;  // non-obsolete terms with no path to root
};

// Immutable is_a DAG. Obsolete terms are carried in the term map but take no
// part in any metric; all per-term queries reject them with LookupError.
// Thread-safe for concurrent readers once constructed.
class OntologyGraph {
public:
    // Builds the child index, rejects cycles (StructuralError naming one
    // cycle), resolves the root (ConfigError when ambiguous or missing), and
    // precomputes shortest-path depths from the root.
    OntologyGraph(std::map<Curie, TermRecord> terms,
                  std::optional<Curie> explicit_root = std::nullopt);

    const std::map<Curie, TermRecord>& terms() const { return terms_; }
    bool has_root() const { return !root_.empty(); }
    const Curie& root() const;  // LookupError on an empty graph
    const TermRecord& term(const Curie& id) const;

    std::size_t non_obsolete_count() const { return non_obsolete_count_; }
    // Sorted ids of non-obsolete terms.
    std::vector<Curie> non_obsolete_ids() const;
    bool reachable(const Curie& id) const;
    // Non-obsolete terms that cannot reach the root.
    std::vector<Curie> unreachable_terms() const;

    // Length of the shortest child->parent path to the root; depth(root)=0.
    // LookupError on unknown/obsolete ids, StructuralError when unreachable.
    std::size_t depth(const Curie& id) const;

    // True iff no non-obsolete term lists id as a parent.
    bool is_leaf(const Curie& id) const;

    // Number of non-obsolete children.
    std::size_t in_degree(const Curie& id) const;

    // Distinct terms reachable via parent edges, excluding id.
    std::size_t ancestor_count(const Curie& id) const;

    // Distinct descendants including id itself.
    std::size_t subgraph_size(const Curie& id) const;

    const std::vector<Curie>& children(const Curie& id) const;

private:
    const TermRecord& active_term(const Curie& id) const;  // rejects obsolete

    std::map<Curie, TermRecord> terms_;
    std::map<Curie, std::vector<Curie>> children_;  // non-obsolete edges only
    std::map<Curie, std::size_t> depth_;            // reachable terms only
    Curie root_;
    std::size_t non_obsolete_count_ = 0;
};

struct ParsedOntology {
    OntologyGraph graph;
    OboParseReport report;
};

// Parse an OBO 1.2/1.4 flat file. Only [Term] stanzas and is_a edges are
// retained; `! comments` on is_a values are stripped; alt_id and
// relationship lines are ignored (the latter counted in the report).
// Throws ParseError (with line number) on stanzas missing id or name.
ParsedOntology parse_obo(std::string_view text,
                         std::optional<Curie> explicit_root = std::nullopt);

// The structural rows of the ontology summary table. Optional values are
// absent when the graph has no terms to average over.
struct ProfileReport {
    std::size_t concepts = 0;               // non-obsolete terms
    double leaf_fraction = 0.0;
    std::optional<double> mean_depth;       // reachable terms only
    double unigram_fraction = 0.0;          // labels without whitespace
    std::optional<double> mean_label_length;  // Unicode scalars
    double leading_000_fraction = 0.0;
    std::optional<double> mean_identifier_entropy;  // bits
    // Filled by the report layer when an annotation table is available.
    std::optional<double> unused_fraction;
    std::optional<double> mean_annotations_per_term;
};

ProfileReport ontology_profile(const OntologyGraph& g);

}  // namespace ontolink
