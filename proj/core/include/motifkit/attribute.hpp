#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace motifkit {

// Attribute values are typed per column at ingestion (see graph_io). The
// comparison rules are deliberately strict: ordering two values of
// different tags is an error, never a silent false. Equality across tags
// is false.
class AttributeValue {
public:
    enum class Tag { string, integer, real, boolean };

    AttributeValue() : value_(std::string{}) {}
    explicit AttributeValue(std::string v) : value_(std::move(v)) {}
    explicit AttributeValue(const char* v) : value_(std::string(v)) {}
    explicit AttributeValue(std::int64_t v) : value_(v) {}
    explicit AttributeValue(double v) : value_(v) {}
    explicit AttributeValue(bool v) : value_(v) {}

    Tag tag() const noexcept { return static_cast<Tag>(value_.index()); }

    bool is_numeric() const noexcept {
        return tag() == Tag::integer || tag() == Tag::real;
    }

    const std::string& as_string() const { return std::get<std::string>(value_); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    double as_real() const { return std::get<double>(value_); }
    bool as_boolean() const { return std::get<bool>(value_); }

    bool operator==(const AttributeValue& other) const {
        if (tag() != other.tag()) return false;
        return value_ == other.value_;
    }
    bool operator!=(const AttributeValue& other) const { return !(*this == other); }

    // Three-way numeric/string/bool-free ordering. Throws TypeMismatch when
    // the tags differ, with the single exception that integer and real are
    // mutually ordered by exact-enough promotion to double.
    int compare(const AttributeValue& other) const {
        if (is_numeric() && other.is_numeric()) {
            const double a = tag() == Tag::integer ? static_cast<double>(as_integer()) : as_real();
            const double b = other.tag() == Tag::integer ? static_cast<double>(other.as_integer())
                                                         : other.as_real();
            if (a < b) return -1;
            if (a > b) return 1;
            return 0;
        }
        if (tag() != other.tag()) {
            throw TypeMismatch(*this, other);
        }
        if (value_ < other.value_) return -1;
        if (other.value_ < value_) return 1;
        return 0;
    }

    // Canonical text form; the exact inverse of the column parser in
    // graph_io, so CSV round-trips are stable.
    std::string to_text() const;

    struct TypeMismatch : std::runtime_error {
        TypeMismatch(const AttributeValue& a, const AttributeValue& b)
            : std::runtime_error("cannot order attribute values of types " +
                                 std::string(tag_name(a.tag())) + " and " +
                                 std::string(tag_name(b.tag()))) {}
    };

    static const char* tag_name(Tag t) noexcept {
        switch (t) {
            case Tag::string: return "string";
            case Tag::integer: return "integer";
            case Tag::real: return "float";
            case Tag::boolean: return "boolean";
        }
        return "?";
    }

private:
    std::variant<std::string, std::int64_t, double, bool> value_;
};

using AttributeMap = std::map<std::string, AttributeValue>;

} // namespace motifkit
