#pragma once

#include <string>

#include "socsen/compose.hpp"

namespace socsen {

/// Canonical plan serialization: fixed key order, RFC 3339 times, stable
/// bytes for identical plans.
std::string plan_to_json(const CompositionPlan& plan);
CompositionPlan plan_from_json(const std::string& text);
CompositionPlan load_plan(const std::string& path);

/// Storyboard SVG: one row per frame, placeholder boxes labeled with the
/// record id, time and the frame's top keywords. No image pixels.
std::string plan_to_svg(const CompositionPlan& plan);

/// Writes plan.json, tapestry.svg and index.html into out_dir (created if
/// missing). Validates that every referenced record exists in the corpus.
void emit_report(const CompositionPlan& plan, const Corpus& corpus, const std::string& out_dir);

}  // namespace socsen
