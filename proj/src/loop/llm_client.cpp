#include "extremal/loop/llm_client.hpp"

#include <cstdlib>
#include <stdexcept>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace extremal {
namespace {

std::string env_or(const char *name, const std::string &fallback) {
    const char *value = std::getenv(name);
    return value && *value ? value : fallback;
}

// "http://host[:port]" -> (host, port). Rejects other schemes.
std::pair<std::string, int> split_http_url(const std::string &url) {
    const std::string prefix = "http://";
    if (url.rfind("https://", 0) == 0)
        throw std::runtime_error("llm client: https endpoints are not supported; "
                                 "use a local http gateway");
    if (url.rfind(prefix, 0) != 0)
        throw std::runtime_error("llm client: endpoint URL must start with http://");
    std::string rest = url.substr(prefix.size());
    if (const auto slash = rest.find('/'); slash != std::string::npos)
        rest = rest.substr(0, slash);
    int port = 80;
    std::string host = rest;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
        host = rest.substr(0, colon);
        port = std::stoi(rest.substr(colon + 1));
    }
    if (host.empty())
        throw std::runtime_error("llm client: endpoint URL has no host");
    return {host, port};
}

} // namespace

ExternalEndpoint resolve_endpoint(ExternalEndpoint endpoint) {
    if (endpoint.base_url.empty())
        endpoint.base_url = env_or("EXTREMAL_LLM_BASE_URL", "");
    if (endpoint.api_key.empty())
        endpoint.api_key = env_or("EXTREMAL_LLM_API_KEY", "");
    if (endpoint.model.empty())
        endpoint.model = env_or("EXTREMAL_LLM_MODEL", "default");
    if (endpoint.base_url.empty())
        throw std::runtime_error("llm client: no endpoint URL (set EXTREMAL_LLM_BASE_URL "
                                 "or configure the binding)");
    return endpoint;
}

std::string chat_complete(const ExternalEndpoint &raw_endpoint, const std::string &prompt,
                          LlmExchange *exchange) {
    const ExternalEndpoint endpoint = resolve_endpoint(raw_endpoint);
    const auto [host, port] = split_http_url(endpoint.base_url);

    nlohmann::json request;
    request["model"] = endpoint.model;
    request["messages"] = nlohmann::json::array({
        {{"role", "user"}, {"content", prompt}},
    });
    const std::string body = request.dump();
    if (exchange)
        exchange->request_body = body;

    httplib::Client client(host, port);
    client.set_connection_timeout(std::max(1, endpoint.timeout_ms / 1000), 0);
    client.set_read_timeout(std::max(1, endpoint.timeout_ms / 1000), 0);
    httplib::Headers headers;
    if (!endpoint.api_key.empty())
        headers.emplace("Authorization", "Bearer " + endpoint.api_key);

    const auto result = client.Post(endpoint.path, headers, body, "application/json");
    if (!result)
        throw std::runtime_error("llm client: request to " + endpoint.base_url +
                                 " failed: " + httplib::to_string(result.error()));
    if (exchange) {
        exchange->http_status = result->status;
        exchange->response_body = result->body;
    }
    if (result->status < 200 || result->status >= 300)
        throw std::runtime_error("llm client: endpoint returned status " +
                                 std::to_string(result->status));

    nlohmann::json reply;
    try {
        reply = nlohmann::json::parse(result->body);
    } catch (const nlohmann::json::parse_error &) {
        throw std::runtime_error("llm client: reply is not JSON");
    }
    // OpenAI chat-completion shape: choices[0].message.content.
    if (!reply.contains("choices") || !reply["choices"].is_array() || reply["choices"].empty())
        throw std::runtime_error("llm client: reply has no choices");
    const auto &message = reply["choices"][0];
    if (!message.contains("message") || !message["message"].contains("content") ||
        !message["message"]["content"].is_string())
        throw std::runtime_error("llm client: reply has no message content");
    return message["message"]["content"].get<std::string>();
}

std::optional<double> parse_boxed_score(const std::string &text) {
    const std::string marker = "\\boxed{";
    std::optional<double> score;
    std::size_t pos = 0;
    while ((pos = text.find(marker, pos)) != std::string::npos) {
        const std::size_t start = pos + marker.size();
        const std::size_t end = text.find('}', start);
        if (end == std::string::npos)
            break;
        std::string inner = text.substr(start, end - start);
        // Trim surrounding whitespace before parsing.
        const auto first = inner.find_first_not_of(" \t\r\n");
        const auto last = inner.find_last_not_of(" \t\r\n");
        if (first != std::string::npos) {
            inner = inner.substr(first, last - first + 1);
            try {
                std::size_t consumed = 0;
                const double value = std::stod(inner, &consumed);
                if (consumed == inner.size())
                    score = value; // keep scanning: the LAST box wins
            } catch (const std::exception &) {
                // non-numeric box: ignore
            }
        }
        pos = end + 1;
    }
    return score;
}

} // namespace extremal
