#include "pauc/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "pauc/errors.hpp"

namespace pauc::jsonio {

std::string number(double v) {
    if (!std::isfinite(v)) {
        throw data_error("cannot serialize non-finite number");
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Writer::comma() {
    if (!first_.empty()) {
        if (!first_.back()) {
            out_ += ',';
        }
        first_.back() = false;
    }
}

void Writer::key(const std::string &k) {
    comma();
    out_ += '"';
    out_ += k; // keys are plain identifiers, no escaping needed
    out_ += "\":";
}

Writer &Writer::begin_object() {
    comma();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

Writer &Writer::begin_object(const std::string &k) {
    key(k);
    out_ += '{';
    first_.push_back(true);
    return *this;
}

Writer &Writer::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

Writer &Writer::begin_array(const std::string &k) {
    key(k);
    out_ += '[';
    first_.push_back(true);
    return *this;
}

Writer &Writer::begin_array() {
    comma();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

Writer &Writer::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

Writer &Writer::field(const std::string &k, double v) {
    key(k);
    out_ += number(v);
    return *this;
}

Writer &Writer::field(const std::string &k, int v) {
    key(k);
    out_ += std::to_string(v);
    return *this;
}

Writer &Writer::field(const std::string &k, const std::string &v) {
    key(k);
    out_ += '"';
    for (char c : v) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
        }
    }
    out_ += '"';
    return *this;
}

Writer &Writer::field(const std::string &k, const std::vector<double> &v) {
    begin_array(k);
    for (double x : v) {
        element(x);
    }
    return end_array();
}

Writer &Writer::element(double v) {
    comma();
    out_ += number(v);
    return *this;
}

} // namespace pauc::jsonio
