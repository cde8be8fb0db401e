#include "pexider/serialize.hpp"

#include "pexider/error.hpp"

#include <iterator>
#include <map>

namespace pexider {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Input iterator that counts the newlines the lexer has consumed.
class LineCountingIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    LineCountingIterator(const char* p, int* line) : p_(p), line_(line) {}

    reference operator*() const { return *p_; }
    LineCountingIterator& operator++() {
        if (*p_ == '\n') {
            ++*line_;
        }
        ++p_;
        return *this;
    }
    LineCountingIterator operator++(int) {
        LineCountingIterator old = *this;
        ++*this;
        return old;
    }
    friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }
    friend bool operator!=(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ != b.p_; }

private:
    const char* p_;
    int* line_;
};

// Records the source line of every value, keyed by JSON pointer.
class LineMapper : public nlohmann::json_sax<Json> {
public:
    explicit LineMapper(const int* line) : line_(line) {}

    std::map<std::string, int> lines;

    bool null() override { return value(); }
    bool boolean(bool) override { return value(); }
    bool number_integer(number_integer_t) override { return value(); }
    bool number_unsigned(number_unsigned_t) override { return value(); }
    bool number_float(number_float_t, const string_t&) override { return value(); }
    bool string(string_t&) override { return value(); }
    bool binary(binary_t&) override { return value(); }

    bool start_object(std::size_t) override {
        value();
        stack_.push_back({false, 0, {}});
        return true;
    }
    bool key(string_t& k) override {
        stack_.back().key = k;
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        value();
        stack_.push_back({true, 0, {}});
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
    struct Frame {
        bool is_array;
        std::size_t index;
        std::string key;
    };

    bool value() {
        std::string path;
        for (const Frame& f : stack_) {
            path += '/';
            path += f.is_array ? std::to_string(f.index) : f.key;
        }
        lines.emplace(path, *line_);
        if (!stack_.empty() && stack_.back().is_array) {
            ++stack_.back().index;
        }
        return true;
    }

    const int* line_;
    std::vector<Frame> stack_;
};

class InstanceReader {
public:
    explicit InstanceReader(std::string_view text) {
        int line = 1;
        LineMapper mapper(&line);
        LineCountingIterator first(text.data(), &line);
        LineCountingIterator last(text.data() + text.size(), &line);
        Json::sax_parse(first, last, &mapper);
        lines_ = std::move(mapper.lines);
    }

    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
        int line = 0;
        for (std::string p = pointer;; p = p.substr(0, p.rfind('/'))) {
            if (auto it = lines_.find(p); it != lines_.end()) {
                line = it->second;
                break;
            }
            if (p.empty()) {
                break;
            }
        }
        throw ParseError((pointer.empty() ? std::string("document") : pointer) + ": " + message, line);
    }

    template <class F>
    auto at(const std::string& pointer, F&& read) const {
        try {
            return read();
        } catch (const ParseError& e) {
            fail(pointer, e.what());
        } catch (const DomainError& e) {
            fail(pointer, e.what());
        } catch (const Json::exception& e) {
            fail(pointer, e.what());
        }
    }

    Interval interval(const Json& doc, const std::string& pointer) const {
        const Json& j = doc.at(Json::json_pointer(pointer));
        if (!j.is_string()) {
            fail(pointer, "expected an interval literal string");
        }
        return at(pointer, [&] { return parse_interval(j.get<std::string>()); });
    }

    const Json& member(const Json& doc, const std::string& key) const {
        if (!doc.contains(key)) {
            fail("", "missing field \"" + key + "\"");
        }
        return doc[key];
    }

    PiecewiseConstant function(const Json& doc, const std::string& key, const Interval& domain) const {
        const Json& arr = member(doc, key);
        const std::string base = "/" + key;
        if (!arr.is_array()) {
            fail(base, "expected a list of {\"piece\", \"value\"} objects");
        }
        std::vector<Piece> pieces;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string here = base + "/" + std::to_string(k);
            const Json& entry = arr[k];
            if (!entry.is_object() || !entry.contains("piece") || !entry.contains("value")) {
                fail(here, "expected {\"piece\": <interval>, \"value\": <rational>}");
            }
            Interval piece = interval(doc, here + "/piece");
            Rational value = at(here + "/value", [&] { return rational_from_json(entry["value"]); });
            pieces.push_back({piece, value});
        }
        return at(base, [&] { return PiecewiseConstant(domain, pieces); });
    }

private:
    std::map<std::string, int> lines_;
};

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.dump());
    }
    if (j.is_number_float()) {
        // Shortest round-trip decimal text, then an exact conversion.
        return parse_rational(j.dump());
    }
    throw ParseError("expected a rational (string such as \"3/2\" or a number)");
}

Json instance_to_json(const EquationInstance& inst) {
    auto function = [](const PiecewiseConstant& f) {
        Json arr = Json::array();
        for (const Piece& p : f.pieces()) {
            arr.push_back({{"piece", to_string(p.piece)}, {"value", to_string(p.value)}});
        }
        return arr;
    };
    Json zero = Json::array();
    for (const Interval& part : inst.zero_set().parts()) {
        zero.push_back(to_string(part));
    }
    return Json{{"I1", to_string(inst.i1())},
                {"I2", to_string(inst.i2())},
                {"zero_set", zero},
                {"f1", function(inst.f1())},
                {"f2", function(inst.f2())}};
}

EquationInstance parse_instance(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        int line = 1;
        for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n' && k + 1 < e.byte) {
                ++line;
            }
        }
        throw ParseError(std::string("malformed JSON: ") + e.what(), line);
    }

    InstanceReader reader(text);
    if (!doc.is_object()) {
        reader.fail("", "expected a JSON object");
    }
    reader.member(doc, "I1");
    reader.member(doc, "I2");
    Interval i1 = reader.interval(doc, "/I1");
    Interval i2 = reader.interval(doc, "/I2");

    const Json& zero = reader.member(doc, "zero_set");
    if (!zero.is_array()) {
        reader.fail("/zero_set", "expected a list of interval literals");
    }
    std::vector<Interval> zero_parts;
    for (std::size_t k = 0; k < zero.size(); ++k) {
        zero_parts.push_back(reader.interval(doc, "/zero_set/" + std::to_string(k)));
    }

    PiecewiseConstant f1 = reader.function(doc, "f1", i1);
    PiecewiseConstant f2 = reader.function(doc, "f2", i2);

    try {
        return EquationInstance(i1, i2, IntervalSet(std::move(zero_parts)), f1, f2);
    } catch (const DomainError& e) {
        std::string what = e.what();
        std::string pointer = what.find("zero set") != std::string::npos ? "/zero_set"
                              : what.find("I1") != std::string::npos   ? "/I1"
                              : what.find("I2") != std::string::npos   ? "/I2"
                                                                        : "";
        reader.fail(pointer, what);
    }
}

std::string dump_instance(const EquationInstance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

Json witness_to_json(const Witness& w) {
    return Json{{"x", to_string(w.x)}, {"y", to_string(w.y)}, {"midpoint", to_string(w.midpoint())}};
}

Json verdict_to_json(const Verdict& v) {
    Json j{{"holds", v.holds}};
    if (v.witness) {
        j["witness"] = witness_to_json(*v.witness);
    }
    return j;
}

Json classification_to_json(const Classification& c) {
    auto optional_rational = [](const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); };
    auto set = [](const IntervalSet& s) {
        Json arr = Json::array();
        for (const Interval& part : s.parts()) {
            arr.push_back(to_string(part));
        }
        return arr;
    };
    Json j{{"case", case_name(c)}, {"clause", clause_name(c)}};
    std::visit(overloaded{
                   [&](const Extremal& e) { j["lambda"] = optional_rational(e.lambda); },
                   [&](const TwoSidedPlateaus& t) {
                       j["lambda"] = optional_rational(t.lambda);
                       j["mu"] = optional_rational(t.mu);
                       j["U1"] = to_string(t.u1);
                       j["U2"] = to_string(t.u2);
                       j["V1"] = to_string(t.v1);
                       j["V2"] = to_string(t.v2);
                       j["K1"] = to_string(t.k1);
                       j["K2"] = to_string(t.k2);
                   },
                   [&](const OneConstant& o) {
                       j["i"] = o.i;
                       j["lambda"] = to_string(o.lambda);
                       j["plateaus"] = set(o.plateaus);
                       j["big_k"] = set(o.big_k);
                   },
                   [&](const NotASolution& n) { j["witness"] = witness_to_json(n.witness); },
                   [](const ZeroSetNotClosed&) {},
               },
               c);
    return j;
}

}  // namespace pexider
