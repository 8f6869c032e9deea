#include "ontolink/obo.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "ontolink/errors.hpp"
#include "ontolink/features.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

namespace {

const std::vector<Curie> kNoChildren;

// One cycle among the given nodes, following in-graph non-obsolete parents.
// Preconditions: every node in `nodes` lies on or leads into a cycle.
std::string describe_cycle(const std::map<Curie, TermRecord>& terms,
                           const std::set<Curie>& nodes) {
    // Walk parent pointers until a node repeats; the walk cannot escape
    // `nodes` because every remaining node still has a remaining parent.
    std::vector<Curie> path;
    std::set<Curie> seen;
    Curie cur = *nodes.begin();
    while (!seen.count(cur)) {
        seen.insert(cur);
        path.push_back(cur);
        const auto& parents = terms.at(cur).parents;
        Curie next;
        for (const auto& p : parents) {
            auto it = terms.find(p);
            if (it != terms.end() && !it->second.obsolete && nodes.count(p)) {
                next = p;
                break;
            }
        }
        cur = next;
    }
    auto start = std::find(path.begin(), path.end(), cur);
    std::string msg;
    for (auto it = start; it != path.end(); ++it) {
        msg += it->str();
        msg += " -> ";
    }
    msg += cur.str();
    return msg;
}

bool has_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

}  // namespace

OntologyGraph::OntologyGraph(std::map<Curie, TermRecord> terms,
                             std::optional<Curie> explicit_root)
    : terms_(std::move(terms)) {
    // Child index over non-obsolete terms; edges to unknown or obsolete
    // parents are kept in the record but carry no structure.
    for (const auto& [id, rec] : terms_) {
        if (rec.obsolete) continue;
        ++non_obsolete_count_;
        for (const auto& p : rec.parents) {
            auto it = terms_.find(p);
            if (it != terms_.end() && !it->second.obsolete) {
                children_[p].push_back(id);
            }
        }
    }

    // Cycle check: Kahn's algorithm peeling terms whose in-graph parents are
    // all consumed.
    {
        std::map<Curie, std::size_t> pending;  // unconsumed in-graph parents
        std::deque<Curie> ready;
        for (const auto& [id, rec] : terms_) {
            if (rec.obsolete) continue;
            std::size_t n = 0;
            for (const auto& p : rec.parents) {
                auto it = terms_.find(p);
                if (it != terms_.end() && !it->second.obsolete) ++n;
            }
            pending[id] = n;
            if (n == 0) ready.push_back(id);
        }
        std::size_t peeled = 0;
        while (!ready.empty()) {
            Curie cur = ready.front();
            ready.pop_front();
            ++peeled;
            auto ch = children_.find(cur);
            if (ch == children_.end()) continue;
            for (const auto& c : ch->second) {
                if (--pending[c] == 0) ready.push_back(c);
            }
        }
        if (peeled != non_obsolete_count_) {
            std::set<Curie> leftover;
            for (const auto& [id, n] : pending) {
                if (n > 0) leftover.insert(id);
            }
            throw StructuralError("cycle detected in is_a graph: " +
                                  describe_cycle(terms_, leftover));
        }
    }

    // Root resolution.
    if (explicit_root) {
        auto it = terms_.find(*explicit_root);
        if (it == terms_.end() || it->second.obsolete) {
            throw ConfigError("explicit root " + explicit_root->str() +
                              " is not a non-obsolete term in the ontology");
        }
        root_ = *explicit_root;
    } else {
        std::vector<Curie> candidates;
        for (const auto& [id, rec] : terms_) {
            if (!rec.obsolete && rec.parents.empty()) candidates.push_back(id);
        }
        if (candidates.size() == 1) {
            root_ = candidates.front();
        } else if (candidates.size() > 1) {
            std::string msg = "multiple root candidates (" +
                              std::to_string(candidates.size()) +
                              ") and no explicit root configured:";
            for (std::size_t i = 0; i < candidates.size() && i < 5; ++i) {
                msg += " " + candidates[i].str();
            }
            throw ConfigError(msg);
        } else if (non_obsolete_count_ > 0) {
            throw ConfigError(
                "no root candidate (every term has parents); configure an explicit root");
        }
        // empty graph: stays rootless
    }

    // Shortest-path depth: BFS from the root over the child index.
    if (!root_.empty()) {
        depth_[root_] = 0;
        std::deque<Curie> queue{root_};
        while (!queue.empty()) {
            Curie cur = queue.front();
            queue.pop_front();
            std::size_t d = depth_[cur];
            auto ch = children_.find(cur);
            if (ch == children_.end()) continue;
            for (const auto& c : ch->second) {
                if (!depth_.count(c)) {
                    depth_[c] = d + 1;
                    queue.push_back(c);
                }
            }
        }
    }
}

const Curie& OntologyGraph::root() const {
    if (root_.empty()) throw LookupError("graph has no root (no terms)");
    return root_;
}

const TermRecord& OntologyGraph::term(const Curie& id) const {
    auto it = terms_.find(id);
    if (it == terms_.end()) throw LookupError("unknown term: " + id.str());
    return it->second;
}

const TermRecord& OntologyGraph::active_term(const Curie& id) const {
    const TermRecord& rec = term(id);
    if (rec.obsolete) throw LookupError("term is obsolete: " + id.str());
    return rec;
}

std::vector<Curie> OntologyGraph::non_obsolete_ids() const {
    std::vector<Curie> out;
    out.reserve(non_obsolete_count_);
    for (const auto& [id, rec] : terms_) {
        if (!rec.obsolete) out.push_back(id);
    }
    return out;
}

bool OntologyGraph::reachable(const Curie& id) const {
    active_term(id);
    return depth_.count(id) > 0;
}

std::vector<Curie> OntologyGraph::unreachable_terms() const {
    std::vector<Curie> out;
    for (const auto& [id, rec] : terms_) {
        if (!rec.obsolete && !depth_.count(id)) out.push_back(id);
    }
    return out;
}

std::size_t OntologyGraph::depth(const Curie& id) const {
    active_term(id);
    auto it = depth_.find(id);
    if (it == depth_.end()) {
        throw StructuralError("term has no path to root: " + id.str());
    }
    return it->second;
}

bool OntologyGraph::is_leaf(const Curie& id) const { return in_degree(id) == 0; }

std::size_t OntologyGraph::in_degree(const Curie& id) const {
    active_term(id);
    auto it = children_.find(id);
    return it == children_.end() ? 0 : it->second.size();
}

std::size_t OntologyGraph::ancestor_count(const Curie& id) const {
    active_term(id);
    std::set<Curie> seen;
    std::deque<Curie> queue{id};
    while (!queue.empty()) {
        Curie cur = queue.front();
        queue.pop_front();
        for (const auto& p : terms_.at(cur).parents) {
            auto it = terms_.find(p);
            if (it == terms_.end() || it->second.obsolete) continue;
            if (seen.insert(p).second) queue.push_back(p);
        }
    }
    return seen.size();
}

std::size_t OntologyGraph::subgraph_size(const Curie& id) const {
    active_term(id);
    std::set<Curie> seen{id};
    std::deque<Curie> queue{id};
    while (!queue.empty()) {
        Curie cur = queue.front();
        queue.pop_front();
        auto ch = children_.find(cur);
        if (ch == children_.end()) continue;
        for (const auto& c : ch->second) {
            if (seen.insert(c).second) queue.push_back(c);
        }
    }
    return seen.size();
}

const std::vector<Curie>& OntologyGraph::children(const Curie& id) const {
    active_term(id);
    auto it = children_.find(id);
    return it == children_.end() ? kNoChildren : it->second;
}

ParsedOntology parse_obo(std::string_view text, std::optional<Curie> explicit_root) {
    std::map<Curie, TermRecord> terms;
    OboParseReport report;

    struct Stanza {
        bool in_term = false;
        std::size_t start_line = 0;
        std::optional<Curie> id;
        std::string name;
        bool obsolete = false;
        std::vector<Curie> parents;
    } cur;

    auto flush = [&](std::size_t end_line) {
        if (!cur.in_term) return;
        if (!cur.id) {
            throw ParseError("[Term] stanza missing id:", cur.start_line);
        }
        if (cur.name.empty() && !cur.obsolete) {
            throw ParseError("non-obsolete term " + cur.id->str() + " missing name:",
                             cur.start_line);
        }
        TermRecord rec;
        rec.id = *cur.id;
        rec.name = cur.name;
        rec.obsolete = cur.obsolete;
        // dedupe, drop nothing else; a self-parent is a self-cycle and is
        // reported through the graph's cycle check
        std::sort(cur.parents.begin(), cur.parents.end());
        cur.parents.erase(std::unique(cur.parents.begin(), cur.parents.end()),
                          cur.parents.end());
        rec.parents = std::move(cur.parents);
        ++report.term_count;
        if (rec.obsolete) ++report.obsolete_count;
        terms[rec.id] = std::move(rec);
        (void)end_line;
        cur = Stanza{};
    };

    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    bool in_other_stanza = false;
    while (reader.next(line, line_no)) {
        std::string_view t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            flush(line_no);
            if (t == "[Term]") {
                cur.in_term = true;
                cur.start_line = line_no;
                in_other_stanza = false;
            } else {
                in_other_stanza = true;  // [Typedef], [Instance], ...
            }
            continue;
        }
        if (!cur.in_term || in_other_stanza) continue;

        auto colon = t.find(':');
        if (colon == std::string_view::npos) continue;
        std::string_view key = t.substr(0, colon);
        std::string_view value = trim(t.substr(colon + 1));

        if (key == "id") {
            auto id = Curie::parse(value);
            if (!id) throw ParseError("unparseable term id '" + std::string(value) + "'", line_no);
            cur.id = *id;
        } else if (key == "name") {
            cur.name = std::string(value);
        } else if (key == "is_a") {
            // strip trailing "! parent name" comment
            auto bang = value.find('!');
            if (bang != std::string_view::npos) value = trim(value.substr(0, bang));
            auto parent = Curie::parse(value);
            if (!parent) throw ParseError("unparseable is_a target '" + std::string(value) + "'", line_no);
            if (cur.id && *parent == *cur.id) {
                throw StructuralError("cycle detected in is_a graph: " + cur.id->str() +
                                      " -> " + cur.id->str());
            }
            cur.parents.push_back(*parent);
        } else if (key == "is_obsolete") {
            cur.obsolete = (value == "true");
        } else if (key == "relationship") {
            ++report.discarded_relationship_lines;
        }
        // alt_id, def, synonym, xref, ... intentionally ignored
    }
    flush(line_no);

    OntologyGraph graph(std::move(terms), explicit_root);
    report.unreachable = graph.unreachable_terms();
    return ParsedOntology{std::move(graph), std::move(report)};
}

ProfileReport ontology_profile(const OntologyGraph& g) {
    ProfileReport p;
    std::size_t leaves = 0, unigrams = 0, leading = 0;
    std::size_t label_chars = 0;
    double entropy_sum = 0.0;
    std::size_t depth_sum = 0, depth_n = 0;

    for (const auto& [id, rec] : g.terms()) {
        if (rec.obsolete) continue;
        ++p.concepts;
        if (g.is_leaf(id)) ++leaves;
        if (!has_whitespace(rec.name)) ++unigrams;
        label_chars += utf8_length(rec.name);
        if (leading_000(id)) ++leading;
        entropy_sum += identifier_entropy(id);
        if (g.reachable(id)) {
            depth_sum += g.depth(id);
            ++depth_n;
        }
    }

    if (p.concepts > 0) {
        p.leaf_fraction = static_cast<double>(leaves) / p.concepts;
        p.unigram_fraction = static_cast<double>(unigrams) / p.concepts;
        p.leading_000_fraction = static_cast<double>(leading) / p.concepts;
        p.mean_label_length = static_cast<double>(label_chars) / p.concepts;
        p.mean_identifier_entropy = entropy_sum / p.concepts;
    }
    if (depth_n > 0) {
        p.mean_depth = static_cast<double>(depth_sum) / depth_n;
    }
    return p;
}

}  // namespace ontolink
