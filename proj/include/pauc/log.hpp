#pragma once

#include <string>

namespace pauc::log {

enum class Level { error = 0, info = 1, debug = 2 };

/// Process-wide verbosity, initialized from the PAUC_LOG environment
/// variable (error | info | debug, default error) on first use.
Level level();
void set_level(Level lv);

/// Messages go to stderr so stdout stays machine-readable.
void error(const std::string &msg);
void info(const std::string &msg);
void debug(const std::string &msg);

} // namespace pauc::log
