#pragma once

// The classic four-variant example workspace used across the test suites:
// one F/G pair per variant over U = {x1..x5}, E = {e1..e4}, plus the
// four-set ranking workspace.

#include <memory>

#include "softhybrid/workspace.hpp"

namespace fixtures {

using namespace softhybrid;

inline UniversePtr classic_universe() {
  return std::make_shared<const Universe>(
      std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
}

inline PSpacePtr classic_pspace() {
  return std::make_shared<const ParameterSpace>(
      std::vector<std::string>{"e1", "e2", "e3", "e4"});
}

inline Workspace example_workspace() {
  UniversePtr u = classic_universe();
  PSpacePtr p = classic_pspace();
  Workspace ws(u, p);

  ws.add("F_A_s", make_set(Variant::soft,
                           {{"e1", 1}, {"e2", 1}, {"e4", 1}},
                           {{"e1", {{"x3", 1}, {"x4", 1}}},
                            {"e2", {{"x1", 1}}},
                            {"e4", {{"x2", 1}, {"x4", 1}}}},
                           u, p));
  ws.add("G_B_s", make_set(Variant::soft,
                           {{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}},
                           {{"e1", {{"x3", 1}, {"x4", 1}, {"x5", 1}}},
                            {"e2", {{"x1", 1}, {"x3", 1}}},
                            {"e3", {{"x1", 1}, {"x2", 1}, {"x4", 1}}},
                            {"e4", {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}}}},
                           u, p));

  ws.add("F_A_fs", make_set(Variant::fuzzy_soft,
                            {{"e2", 1}, {"e4", 1}},
                            {{"e2", {{"x1", 0.1}, {"x3", 0.8}, {"x4", 0.3}}},
                             {"e4", {{"x1", 0.3}, {"x2", 0.4}}}},
                            u, p));
  ws.add("G_B_fs", make_set(Variant::fuzzy_soft,
                            {{"e1", 1}, {"e2", 1}, {"e4", 1}},
                            {{"e1", {{"x1", 0.3}, {"x2", 0.2}, {"x4", 0.7}}},
                             {"e2", {{"x1", 0.4}, {"x4", 0.5}}},
                             {"e4", {{"x2", 0.3}, {"x3", 0.2}, {"x4", 0.8}}}},
                            u, p));

  ws.add("F_A_fps", make_set(Variant::fp_soft,
                             {{"e2", 0.2}, {"e3", 0.6}, {"e4", 1}},
                             {{"e2", {{"x2", 1}, {"x4", 1}}},
                              {"e3", {{"x1", 1}, {"x3", 1}, {"x4", 1}}},
                              {"e4", {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}}}},
                             u, p));
  ws.add("G_B_fps", make_set(Variant::fp_soft,
                             {{"e1", 0.3}, {"e2", 0.2}, {"e3", 0.6}},
                             {{"e1", {{"x1", 1}, {"x2", 1}}},
                              {"e2", {{"x4", 1}}},
                              {"e3", {{"x1", 1}, {"x4", 1}}}},
                             u, p));

  ws.add("F_A_fpfs", make_set(Variant::fpfs,
                              {{"e1", 0.4}, {"e2", 0.2}},
                              {{"e1", {{"x1", 0.3}, {"x2", 0.1}}},
                               {"e2", {{"x2", 0.1}, {"x3", 0.4}, {"x4", 0.6}}}},
                              u, p));
  ws.add("G_B_fpfs", make_set(Variant::fpfs,
                              {{"e1", 0.4}, {"e2", 0.2}, {"e3", 0.6}},
                              {{"e1", {{"x2", 0.2}, {"x3", 0.5}}},
                               {"e2", {{"x3", 0.6}}},
                               {"e3", {{"x2", 0.2}}}},
                              u, p));
  return ws;
}

inline Workspace ranking_workspace() {
  UniversePtr u = classic_universe();
  PSpacePtr p = classic_pspace();
  Workspace ws(u, p);

  ws.add("F_A", make_set(Variant::fpfs,
                         {{"e2", 0.1}, {"e3", 0.4}, {"e4", 0.2}},
                         {{"e2", {{"x1", 0.5}, {"x3", 0.1}, {"x4", 0.7}}},
                          {"e3", {{"x3", 0.2}, {"x4", 0.4}, {"x5", 0.3}}},
                          {"e4", {{"x2", 0.5}, {"x3", 0.1}, {"x4", 0.7}}}},
                         u, p));
  ws.add("G_B", make_set(Variant::fpfs,
                         {{"e2", 0.2}, {"e3", 0.5}, {"e4", 0.4}},
                         {{"e2", {{"x1", 0.3}, {"x3", 0.2}, {"x4", 0.5}}},
                          {"e3", {{"x3", 0.2}, {"x4", 0.4}, {"x5", 0.3}}},
                          {"e4", {{"x2", 0.5}, {"x3", 0.1}, {"x4", 0.7}}}},
                         u, p));
  ws.add("H_C", make_set(Variant::fpfs,
                         {{"e2", 0.3}, {"e3", 0.3}, {"e4", 0.1}},
                         {{"e2", {{"x1", 0.4}, {"x3", 0.3}, {"x4", 0.1}}},
                          {"e3", {{"x3", 0.1}, {"x4", 0.1}, {"x5", 0.3}}},
                          {"e4", {{"x2", 0.6}, {"x3", 0.5}, {"x4", 0.4}}}},
                         u, p));
  ws.add("K_D", make_set(Variant::fpfs,
                         {{"e2", 0.4}, {"e3", 0.1}, {"e4", 0.2}},
                         {{"e2", {{"x1", 0.3}, {"x3", 0.4}, {"x4", 0.4}}},
                          {"e3", {{"x3", 0.4}, {"x4", 0.2}, {"x5", 0.5}}},
                          {"e4", {{"x2", 0.1}, {"x3", 0.2}, {"x4", 0.6}}}},
                         u, p));
  return ws;
}

}  // namespace fixtures
