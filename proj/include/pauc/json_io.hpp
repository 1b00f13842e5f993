#pragma once

#include <string>
#include <vector>

namespace pauc::jsonio {

/// 17-significant-digit rendering (%.17g), enough to round-trip any finite
/// double exactly; integral values keep a plain rendering ("3" not "3.0").
std::string number(double v);

/// Incremental writer for the JSON documents this tool emits.  Keys are
/// written in the order given; callers pass them already sorted so equal
/// inputs serialize byte-identically.
class Writer {
  public:
    Writer &begin_object();
    Writer &end_object();
    Writer &begin_array(const std::string &key);
    Writer &begin_array();
    Writer &end_array();

    Writer &field(const std::string &key, double v);
    Writer &field(const std::string &key, int v);
    Writer &field(const std::string &key, const std::string &v);
    Writer &field(const std::string &key, const std::vector<double> &v);
    Writer &begin_object(const std::string &key);
    Writer &element(double v);

    std::string str() const { return out_; }

  private:
    void comma();
    void key(const std::string &k);

    std::string out_;
    std::vector<bool> first_; // per nesting level
};

} // namespace pauc::jsonio
