#include "extremal/loop/prompts.hpp"

namespace extremal {

const std::string &default_idea_prompt() {
    static const std::string prompt = R"(You are a research advisor tasked with evolving and improving research proposals.
Your goal is to generate a new research proposal that builds upon the current proposal while addressing its limitations and incorporating insights from successful approaches.

Based on the following information, generate an improved research proposal:

Focus on:
1. Identifying weaknesses in the current approach based on performance metrics
2. Proposing novel improvements that could enhance performance
3. Learning from successful inspirations while maintaining originality
4. Ensuring the new proposal is implementable

- Current Proposal:

{proposal}

- Current Program:

{program}

- Current Metrics:

{results}

Please generate a new research proposal that:
1. Addresses the limitations shown in the current metrics
2. Incorporates insights from successful approaches
3. Proposes specific technical improvements
4. Maintains clarity and technical rigor

Return the proposal as a clear, concise research abstract.
)";
    return prompt;
}

const std::string &default_program_prompt() {
    static const std::string prompt = R"(You are an expert software developer tasked with iteratively improving a codebase.
Your job is to analyze the current program and suggest improvements based on the current proposal and feedback from previous round.
Focus on making targeted changes that will increase the program's performance metrics.

# Previous Proposal:

{previous_proposal}

# Previous Program:

{previous_program}

# Previous Performance Metrics:

{previous_result}

# Current Proposal

{proposal}

# Task

Suggest improvements to the program that will lead to better performance on the specified metrics.

You MUST use the exact SEARCH/REPLACE diff format shown below to indicate changes:

<<<<<<< SEARCH
# Original code to find and replace (must match exactly)
=======
# New replacement code
>>>>>>> REPLACE

Example of valid diff format:

<<<<<<< SEARCH
for i in range(m):
    for j in range(p):
        for k in range(n):
            C[i, j] += A[i, k] * B[k, j]
=======
# Reorder loops for better memory access pattern
for i in range(m):
    for k in range(n):
        for j in range(p):
            C[i, j] += A[i, k] * B[k, j]
>>>>>>> REPLACE

You can suggest multiple changes. Each SEARCH section must exactly match code in the current program.

Be thoughtful about your changes and explain your reasoning thoroughly.

IMPORTANT: Do not rewrite the entire program - focus on targeted improvements.
)";
    return prompt;
}

const std::string &default_rm_prompt() {
    static const std::string prompt = R"(You are an expert reviewer tasked with evaluating the quality of a research proposal.

Your goal is to assign a score between 1 and 10 based on the proposal's clarity, novelty, technical rigor, and potential impact. Here are the criteria:

1. Read the following proposal carefully and provide a score from 1 to 10.

2. Score 6 means slightly higher than the borderline, 5 is slightly lower than the borderline.

Write the score in the \boxed{}.

{proposal}
)";
    return prompt;
}

std::string render_template(std::string text, const std::map<std::string, std::string> &vars) {
    for (const auto &[key, value] : vars) {
        const std::string token = "{" + key + "}";
        std::size_t pos = 0;
        while ((pos = text.find(token, pos)) != std::string::npos) {
            text.replace(pos, token.size(), value);
            pos += value.size();
        }
    }
    return text;
}

} // namespace extremal
