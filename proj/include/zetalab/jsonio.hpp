#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// Write-only JSON tree with deterministic output: object keys stay in
// insertion order and numbers are emitted exactly as formatted by the
// caller, so equal inputs produce byte-identical documents.
class Json {
  public:
    static Json object() { return Json(Kind::Object); }
    static Json array() { return Json(Kind::Array); }
    static Json str(std::string s) {
        Json j(Kind::String);
        j.scalar_ = std::move(s);
        return j;
    }
    // preformatted numeric literal ("1.5e-3"); caller guarantees validity
    static Json number_raw(std::string s) {
        Json j(Kind::Number);
        j.scalar_ = std::move(s);
        return j;
    }
    static Json integer(long long v) { return number_raw(std::to_string(v)); }
    static Json boolean(bool b) {
        Json j(Kind::Bool);
        j.scalar_ = b ? "true" : "false";
        return j;
    }

    Json& add(const std::string& key, Json v) {
        if (kind_ != Kind::Object) throw InternalError("add() on a non-object JSON node");
        members_.emplace_back(key, std::move(v));
        return *this;
    }

    Json& push(Json v) {
        if (kind_ != Kind::Array) throw InternalError("push() on a non-array JSON node");
        members_.emplace_back(std::string(), std::move(v));
        return *this;
    }

    bool is_scalar() const { return kind_ != Kind::Object && kind_ != Kind::Array; }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

    // "path = scalar" lines for the plain-text rendering; arrays of scalars
    // print inline in JSON form
    void flatten(const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) const {
        switch (kind_) {
            case Kind::Object:
                for (const auto& [k, v] : members_)
                    v.flatten(prefix.empty() ? k : prefix + "." + k, out);
                return;
            case Kind::Array: {
                bool all_scalar = true;
                for (const auto& m : members_) all_scalar = all_scalar && m.second.is_scalar();
                if (all_scalar) {
                    out.emplace_back(prefix, dump());
                } else {
                    for (std::size_t i = 0; i < members_.size(); ++i)
                        members_[i].second.flatten(prefix + "[" + std::to_string(i) + "]", out);
                }
                return;
            }
            case Kind::String:
                out.emplace_back(prefix, scalar_);
                return;
            default:
                out.emplace_back(prefix, scalar_);
        }
    }

  private:
    enum class Kind { Object, Array, String, Number, Bool };

    explicit Json(Kind k) : kind_(k) {}

    static void escape(const std::string& s, std::string& out) {
        out += '"';
        for (unsigned char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (c < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += static_cast<char>(c);
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (kind_) {
            case Kind::Object: {
                out += '{';
                bool first = true;
                for (const auto& [k, v] : members_) {
                    if (!first) out += ',';
                    first = false;
                    escape(k, out);
                    out += ':';
                    v.write(out);
                }
                out += '}';
                return;
            }
            case Kind::Array: {
                out += '[';
                bool first = true;
                for (const auto& m : members_) {
                    if (!first) out += ',';
                    first = false;
                    m.second.write(out);
                }
                out += ']';
                return;
            }
            case Kind::String:
                escape(scalar_, out);
                return;
            default:
                out += scalar_;
        }
    }

    Kind kind_;
    std::string scalar_;
    std::vector<std::pair<std::string, Json>> members_;
};

} // namespace zetalab
