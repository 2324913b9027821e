#pragma once

#include <optional>
#include <string>

#include "extremal/loop/bindings.hpp"

namespace extremal {

// One request/response pair, captured for the audit log.
struct LlmExchange {
    std::string request_body;
    std::string response_body;
    int http_status = 0;
};

// Send `prompt` as a single user message to the endpoint's chat-completion
// route and return the assistant reply text. Fills *exchange (when given)
// even on failure. Throws std::runtime_error on connection errors, non-2xx
// statuses, https:// URLs, or replies without a message content.
std::string chat_complete(const ExternalEndpoint &endpoint, const std::string &prompt,
                          LlmExchange *exchange = nullptr);

// Endpoint with empty fields resolved from the environment
// (EXTREMAL_LLM_BASE_URL, EXTREMAL_LLM_API_KEY, EXTREMAL_LLM_MODEL).
ExternalEndpoint resolve_endpoint(ExternalEndpoint endpoint);

// Numeric value of the LAST \boxed{...} in the text; nullopt when no boxed
// number exists. Tolerates whitespace inside the braces.
std::optional<double> parse_boxed_score(const std::string &text);

} // namespace extremal
