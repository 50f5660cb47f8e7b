#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "proofmesh/errors.hpp"
#include "proofmesh/field.hpp"

namespace proofmesh {

// Values carried by the indexed wires; w[0] is the constant one.
struct Witness {
    std::vector<FieldElement> w;
};

// A gate-list arithmetic circuit over a constant-one wire, k input wires,
// and two-operand add/mul gates. Wire indices go to the constant wire (0),
// the inputs (1..k), and multiplication outputs; addition outputs stay
// anonymous and exist only as operands of later gates.
//
// Text format, one statement per line, '#' starts a comment:
//   inputs <k>            first statement, declares w1..wk
//   public <i> ...        marks wire indices as publicly visible
//   add <out> <a> <b>     <out> is a fresh name; operands are `one`, `w<i>`,
//   mul <out> <a> <b>     or the name of an earlier gate
//   return <name>         marks an output (indexed wires only, auto-public)
class Circuit {
  public:
    struct Node {
        enum class Kind : std::uint8_t { constant_one, input, add_gate, mul_gate, padding_zero };
        Kind kind;
        std::uint32_t lhs = 0, rhs = 0;  // operand node ids (gates only)
        std::uint32_t wire = 0;          // wire index; unused for add gates
    };

    static Circuit parse(const std::string& text) {
        Circuit c;
        std::istringstream stream(text);
        std::string raw;
        int line_no = 0;
        bool saw_inputs = false;
        std::unordered_map<std::string, std::uint32_t> names;
        std::vector<std::pair<std::uint32_t, int>> public_decls;  // index, declaring line
        std::set<std::uint32_t> io;

        while (std::getline(stream, raw)) {
            line_no++;
            std::vector<std::string> tok = tokenize(raw);
            if (tok.empty()) continue;
            const std::string& kw = tok[0];

            if (!saw_inputs && kw != "inputs")
                throw ParseError(line_no, "expected 'inputs' before other statements");

            if (kw == "inputs") {
                if (saw_inputs) throw ParseError(line_no, "duplicate 'inputs' declaration");
                if (tok.size() != 2) throw ParseError(line_no, "usage: inputs <k>");
                c.num_inputs_ = parse_index(tok[1], line_no);
                saw_inputs = true;
                c.nodes_.push_back(Node{Node::Kind::constant_one, 0, 0, 0});
                for (std::uint32_t i = 1; i <= c.num_inputs_; i++)
                    c.nodes_.push_back(Node{Node::Kind::input, 0, 0, i});
            } else if (kw == "public") {
                if (tok.size() < 2) throw ParseError(line_no, "usage: public <i> ...");
                for (std::size_t t = 1; t < tok.size(); t++)
                    public_decls.emplace_back(parse_index(tok[t], line_no), line_no);
            } else if (kw == "add" || kw == "mul") {
                if (tok.size() != 4) throw ParseError(line_no, "usage: " + kw + " <out> <a> <b>");
                const std::string& out = tok[1];
                if (out == "one" || is_input_ref(out))
                    throw ParseError(line_no, "reserved wire name '" + out + "'");
                if (names.count(out))
                    throw ParseError(line_no, "duplicate wire name '" + out + "'");
                Node node{kw == "add" ? Node::Kind::add_gate : Node::Kind::mul_gate, 0, 0, 0};
                node.lhs = c.resolve(names, tok[2], line_no);
                node.rhs = c.resolve(names, tok[3], line_no);
                if (node.kind == Node::Kind::mul_gate) {
                    c.num_mul_++;
                    node.wire = c.num_inputs_ + c.num_mul_;
                    c.mul_gate_nodes_.push_back(static_cast<std::uint32_t>(c.nodes_.size()));
                }
                names.emplace(out, static_cast<std::uint32_t>(c.nodes_.size()));
                c.nodes_.push_back(node);
            } else if (kw == "return") {
                if (tok.size() != 2) throw ParseError(line_no, "usage: return <name>");
                std::uint32_t id = c.resolve(names, tok[1], line_no);
                if (c.nodes_[id].kind == Node::Kind::add_gate)
                    throw ParseError(line_no, "cannot return '" + tok[1] +
                                                  "': addition outputs carry no wire index");
                io.insert(c.nodes_[id].wire);
            } else {
                throw ParseError(line_no, "unknown statement '" + kw + "'");
            }
        }

        if (c.num_mul_ == 0) throw ParseError(0, "no multiplication gates");
        c.m_ = c.num_inputs_ + c.num_mul_;
        for (const auto& [idx, decl_line] : public_decls) {
            if (idx > c.m_)
                throw ParseError(decl_line, "public wire index " + std::to_string(idx) +
                                                " out of range (largest wire index is " +
                                                std::to_string(c.m_) + ")");
            io.insert(idx);
        }
        c.io_.assign(io.begin(), io.end());
        c.rebuild_mid();
        return c;
    }

    // Appends 0*0 multiplication gates until the gate count is a power of
    // two. All dummies read one fresh zero-valued wire; each writes its own
    // fresh output wire. Every fresh wire stays out of the public set.
    Circuit pad_to_power_of_two() const {
        Circuit c = *this;
        std::uint32_t target = 1;
        while (target < c.num_mul_) target *= 2;
        if (target == c.num_mul_) return c;

        std::uint32_t zero_node = static_cast<std::uint32_t>(c.nodes_.size());
        c.nodes_.push_back(Node{Node::Kind::padding_zero, 0, 0, c.m_ + 1});
        std::uint32_t next_wire = c.m_ + 2;
        while (c.num_mul_ < target) {
            c.mul_gate_nodes_.push_back(static_cast<std::uint32_t>(c.nodes_.size()));
            c.nodes_.push_back(Node{Node::Kind::mul_gate, zero_node, zero_node, next_wire++});
            c.num_mul_++;
        }
        c.m_ = next_wire - 1;
        c.rebuild_mid();
        return c;
    }

    Witness evaluate(const PrimeField& field, const std::vector<FieldElement>& inputs) const {
        if (inputs.size() != num_inputs_)
            throw Error("circuit expects " + std::to_string(num_inputs_) + " input values, got " +
                        std::to_string(inputs.size()));
        for (const auto& v : inputs)
            if (!(v.field() == field)) throw Error("input value from a different field");

        std::vector<FieldElement> value;
        value.reserve(nodes_.size());
        Witness witness;
        witness.w.assign(m_ + 1, field.zero());
        for (const Node& node : nodes_) {
            switch (node.kind) {
                case Node::Kind::constant_one: value.push_back(field.one()); break;
                case Node::Kind::input: value.push_back(inputs[node.wire - 1]); break;
                case Node::Kind::padding_zero: value.push_back(field.zero()); break;
                case Node::Kind::add_gate: value.push_back(value[node.lhs] + value[node.rhs]); break;
                case Node::Kind::mul_gate: value.push_back(value[node.lhs] * value[node.rhs]); break;
            }
            if (node.kind != Node::Kind::add_gate) witness.w[node.wire] = value.back();
        }
        return witness;
    }

    std::uint32_t num_inputs() const { return num_inputs_; }
    std::uint32_t num_mul_gates() const { return num_mul_; }
    // Largest wire index; the indexed wires are 0..m().
    std::uint32_t m() const { return m_; }
    const std::vector<std::uint32_t>& io_indices() const { return io_; }
    const std::vector<std::uint32_t>& mid_indices() const { return mid_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    // Node ids of the multiplication gates, in gate-label order.
    const std::vector<std::uint32_t>& mul_gate_nodes() const { return mul_gate_nodes_; }

  private:
    Circuit() = default;

    static std::vector<std::string> tokenize(const std::string& raw) {
        std::string body = raw.substr(0, raw.find('#'));
        std::istringstream ss(body);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        return tok;
    }

    static bool is_input_ref(const std::string& t) {
        if (t.size() < 2 || t[0] != 'w') return false;
        return std::all_of(t.begin() + 1, t.end(), [](unsigned char ch) { return std::isdigit(ch); });
    }

    static std::uint32_t parse_index(const std::string& t, int line_no) {
        if (t.empty() || !std::all_of(t.begin(), t.end(),
                                      [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError(line_no, "expected a number, got '" + t + "'");
        unsigned long long v = 0;
        try {
            v = std::stoull(t);
        } catch (const std::out_of_range&) {
            throw ParseError(line_no, "index too large");
        }
        if (v > 0xffffffffULL) throw ParseError(line_no, "index too large");
        return static_cast<std::uint32_t>(v);
    }

    std::uint32_t resolve(const std::unordered_map<std::string, std::uint32_t>& names,
                          const std::string& t, int line_no) const {
        if (t == "one") return 0;
        if (is_input_ref(t)) {
            std::uint32_t i = parse_index(t.substr(1), line_no);
            if (i < 1 || i > num_inputs_)
                throw ParseError(line_no, "undefined wire '" + t + "'");
            return i;
        }
        auto it = names.find(t);
        if (it == names.end()) throw ParseError(line_no, "undefined wire '" + t + "'");
        return it->second;
    }

    void rebuild_mid() {
        mid_.clear();
        std::set<std::uint32_t> io(io_.begin(), io_.end());
        for (std::uint32_t i = 0; i <= m_; i++)
            if (!io.count(i)) mid_.push_back(i);
    }

    std::uint32_t num_inputs_ = 0;
    std::uint32_t num_mul_ = 0;
    std::uint32_t m_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> mul_gate_nodes_;
    std::vector<std::uint32_t> io_, mid_;
};

// Reads "one decimal field element per line" files (witness inputs, public
// values). '#' comments and blank lines are allowed; values must already be
// reduced, i.e. lie in [0, p).
inline std::vector<FieldElement> parse_field_values(const std::string& text,
                                                    const PrimeField& field) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    std::vector<FieldElement> out;
    while (std::getline(stream, raw)) {
        line_no++;
        std::string body = raw.substr(0, raw.find('#'));
        std::istringstream ss(body);
        std::string tok;
        if (!(ss >> tok)) continue;
        std::string extra;
        if (ss >> extra) throw ParseError(line_no, "expected one value per line");
        if (!std::all_of(tok.begin(), tok.end(),
                         [](unsigned char ch) { return std::isdigit(ch); }))
            throw ParseError(line_no, "expected a decimal field element, got '" + tok + "'");
        unsigned long long v = 0;
        try {
            v = std::stoull(tok);
        } catch (const std::out_of_range&) {
            v = field.modulus();  // anything this wide is out of range below
        }
        if (v >= field.modulus())
            throw ParseError(line_no, "value " + tok + " outside the field (modulus " +
                                          std::to_string(field.modulus()) + ")");
        out.push_back(field.element(v));
    }
    return out;
}

}  // namespace proofmesh
