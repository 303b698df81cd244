#include "nanotop/text_format.hpp"

#include <sstream>
#include <stdexcept>

namespace nanotop {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct KeyedLine {
    int number = 0;
    std::string key;
    std::string value;
};

std::vector<KeyedLine> keyed_lines(const std::string& text) {
    std::vector<KeyedLine> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError(number, "expected 'key: value'");
        }
        KeyedLine kl;
        kl.number = number;
        kl.key = trim(line.substr(0, colon));
        kl.value = trim(line.substr(colon + 1));
        if (kl.key.empty()) throw ParseError(number, "missing key before ':'");
        out.push_back(std::move(kl));
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& value) {
    std::vector<std::string> tokens;
    std::istringstream in(value);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

// Bracketed block lists: "[r1 r2] [] [*]". A block of {"*"} means the full
// universe.
std::vector<std::vector<std::string>> parse_blocks(const std::string& value,
                                                   int line) {
    std::string spaced;
    spaced.reserve(value.size() + 8);
    for (char c : value) {
        if (c == '[' || c == ']') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    const std::vector<std::string> tokens = split_tokens(spaced);
    std::vector<std::vector<std::string>> blocks;
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (tokens[i] != "[") {
            throw ParseError(line, "expected '[' before '" + tokens[i] + "'");
        }
        ++i;
        std::vector<std::string> block;
        while (i < tokens.size() && tokens[i] != "]") {
            if (tokens[i] == "[") {
                throw ParseError(line, "unexpected '[' inside a block");
            }
            block.push_back(tokens[i]);
            ++i;
        }
        if (i == tokens.size()) throw ParseError(line, "unterminated '['");
        ++i;  // consume ']'
        if (block.size() > 1) {
            for (const std::string& label : block) {
                if (label == "*") {
                    throw ParseError(line,
                                     "'*' must be the only entry in a block");
                }
            }
        }
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) throw ParseError(line, "expected at least one block");
    return blocks;
}

Mask block_to_mask(const UniversePtr& u,
                   const std::vector<std::string>& block, int line) {
    if (block.size() == 1 && block[0] == "*") return u->full_mask();
    Mask bits = 0;
    for (const std::string& label : block) {
        const auto p = u->find(label);
        if (!p) throw ParseError(line, "unknown point '" + label + "'");
        bits |= Mask{1} << *p;
    }
    return bits;
}

}  // namespace

NanoSpace parse_space_text(const std::string& text) {
    const std::vector<KeyedLine> lines = keyed_lines(text);
    const KeyedLine* points = nullptr;
    const KeyedLine* classes = nullptr;
    const KeyedLine* subset = nullptr;
    const KeyedLine* opens = nullptr;
    for (const KeyedLine& kl : lines) {
        const KeyedLine** slot = nullptr;
        if (kl.key == "points") slot = &points;
        else if (kl.key == "classes") slot = &classes;
        else if (kl.key == "subset") slot = &subset;
        else if (kl.key == "opens") slot = &opens;
        else throw ParseError(kl.number, "unknown key '" + kl.key + "'");
        if (*slot != nullptr) {
            throw ParseError(kl.number, "duplicate key '" + kl.key + "'");
        }
        *slot = &kl;
    }
    if (points == nullptr) {
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "missing 'points:' line");
    }

    UniversePtr u;
    try {
        u = make_universe(split_tokens(points->value));
    } catch (const std::invalid_argument& e) {
        throw ParseError(points->number, e.what());
    }

    const bool rough = classes != nullptr || subset != nullptr;
    if (rough && opens != nullptr) {
        throw ParseError(opens->number,
                         "give either classes+subset or opens, not both");
    }
    if (rough) {
        if (classes == nullptr) {
            throw ParseError(subset->number,
                             "'subset:' requires a 'classes:' line");
        }
        if (subset == nullptr) {
            throw ParseError(classes->number,
                             "'classes:' requires a 'subset:' line");
        }
        std::vector<Mask> blocks;
        for (const auto& block : parse_blocks(classes->value, classes->number)) {
            blocks.push_back(block_to_mask(u, block, classes->number));
        }
        Mask m = 0;
        for (const std::string& label : split_tokens(subset->value)) {
            const auto p = u->find(label);
            if (!p) {
                throw ParseError(subset->number,
                                 "unknown point '" + label + "'");
            }
            m |= Mask{1} << *p;
        }
        try {
            return build_nano_topology(make_partition(u, std::move(blocks)),
                                       PointSet{u, m});
        } catch (const std::invalid_argument& e) {
            throw ParseError(classes->number, e.what());
        }
    }

    if (opens == nullptr) {
        throw ParseError(points->number,
                         "missing 'classes:'+'subset:' or 'opens:'");
    }
    std::vector<Mask> members;
    for (const auto& block : parse_blocks(opens->value, opens->number)) {
        members.push_back(block_to_mask(u, block, opens->number));
    }
    try {
        return make_explicit_space(u, make_family(u, std::move(members)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(opens->number, e.what());
    }
}

std::string print_space_text(const NanoSpace& s) {
    const UniversePtr& u = s.universe();
    std::string out = "points:";
    for (const std::string& label : u->labels()) {
        out += ' ';
        out += label;
    }
    out += '\n';
    if (s.is_rough_derived()) {
        const RoughProvenance& rp = *s.provenance();
        out += "classes:";
        for (const Mask block : rp.partition.blocks) {
            out += ' ';
            out += block_to_string(u, block);
        }
        out += "\nsubset:";
        for (const std::string& label : PointSet{u, rp.subset}.labels()) {
            out += ' ';
            out += label;
        }
        out += '\n';
    } else {
        out += "opens: ";
        out += family_to_blocks_string(s.opens());
        out += '\n';
    }
    return out;
}

MapFileData parse_map_text(const std::string& text) {
    const std::vector<KeyedLine> lines = keyed_lines(text);
    MapFileData data;
    bool have_source = false;
    bool have_target = false;
    bool have_map = false;
    int last_line = 1;
    for (const KeyedLine& kl : lines) {
        last_line = kl.number;
        if (kl.key == "source" || kl.key == "target") {
            bool& have = kl.key == "source" ? have_source : have_target;
            if (have) {
                throw ParseError(kl.number, "duplicate key '" + kl.key + "'");
            }
            if (kl.value.empty()) {
                throw ParseError(kl.number, "empty '" + kl.key + "' reference");
            }
            (kl.key == "source" ? data.source_ref : data.target_ref) = kl.value;
            have = true;
        } else if (kl.key == "map") {
            have_map = true;
            // Normalize "a->b" to "a -> b" and tokenize.
            std::string spaced;
            for (std::size_t i = 0; i < kl.value.size(); ++i) {
                if (kl.value[i] == '-' && i + 1 < kl.value.size() &&
                    kl.value[i + 1] == '>') {
                    spaced += " -> ";
                    ++i;
                } else {
                    spaced += kl.value[i];
                }
            }
            const std::vector<std::string> tokens = split_tokens(spaced);
            if (tokens.size() % 3 != 0) {
                throw ParseError(kl.number,
                                 "arrows must come in 'from -> to' triples");
            }
            for (std::size_t i = 0; i < tokens.size(); i += 3) {
                if (tokens[i + 1] != "->") {
                    throw ParseError(kl.number, "expected '->' after '" +
                                                    tokens[i] + "'");
                }
                data.arrows.emplace_back(tokens[i], tokens[i + 2]);
            }
        } else {
            throw ParseError(kl.number, "unknown key '" + kl.key + "'");
        }
    }
    if (!have_source) throw ParseError(last_line, "missing 'source:' line");
    if (!have_target) throw ParseError(last_line, "missing 'target:' line");
    if (!have_map || data.arrows.empty()) {
        throw ParseError(last_line, "missing 'map:' arrows");
    }
    return data;
}

FiniteMap make_map_from_file_data(const MapFileData& data,
                                  const NanoSpace& source,
                                  const NanoSpace& target) {
    return make_map(source.universe(), target.universe(), data.arrows);
}

std::string block_to_string(const UniversePtr& u, Mask bits) {
    if (bits == 0) return "[]";
    if (bits == u->full_mask()) return "[*]";
    std::string out = "[";
    bool first = true;
    for (const std::string& label : PointSet{u, bits}.labels()) {
        if (!first) out += ' ';
        out += label;
        first = false;
    }
    out += ']';
    return out;
}

std::string family_to_blocks_string(const SetFamily& f) {
    std::string out;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (i) out += ' ';
        out += block_to_string(f.universe, f.members[i]);
    }
    return out;
}

}  // namespace nanotop
