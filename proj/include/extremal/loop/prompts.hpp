#pragma once

#include <map>
#include <string>

namespace extremal {

// Built-in prompt templates for the external generator and reward model.
// data/prompts/*.txt ships the same text for operators who want to edit
// them; a loop config can override any template with a custom string.
// Placeholders use {name} syntax.

// Placeholders: {proposal}, {program}, {results}.
const std::string &default_idea_prompt();

// Placeholders: {previous_proposal}, {previous_program}, {previous_result},
// {proposal}.
const std::string &default_program_prompt();

// Placeholder: {proposal}. The reply must carry the score in \boxed{...}.
const std::string &default_rm_prompt();

// Replace every "{key}" occurrence for each map entry. Unknown placeholders
// are left intact (so literal braces in templates survive).
std::string render_template(std::string text, const std::map<std::string, std::string> &vars);

} // namespace extremal
