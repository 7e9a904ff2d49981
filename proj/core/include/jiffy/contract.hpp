#pragma once

#include <stdexcept>
#include <string>

namespace jiffy {

/// Thrown by debug builds when a caller breaks a documented contract
/// (second consumer thread, duplicate retire position, ...). Release builds
/// compile the checks out.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace jiffy

#if !defined(JIFFY_ENFORCE_CONTRACTS) && !defined(NDEBUG)
#define JIFFY_ENFORCE_CONTRACTS 1
#endif

#if defined(JIFFY_ENFORCE_CONTRACTS) && JIFFY_ENFORCE_CONTRACTS
#define JIFFY_CONTRACT(cond, msg)                                                                  \
    do {                                                                                           \
        if (!(cond)) throw ::jiffy::ContractViolation(msg);                                        \
    } while (0)
#else
#define JIFFY_CONTRACT(cond, msg) ((void)0)
#endif
