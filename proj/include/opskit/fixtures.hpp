#pragma once

#include <string_view>

// Sample datasets shipped with the library. The same bytes are installed
// under fixtures/ for CLI use; tests assert the two copies stay identical.
namespace opskit::fixtures {

// 8-vertex, 15-edge weighted graph used throughout the MST examples.
inline constexpr std::string_view kFig1Graph =
    "n 8\n"
    "1 2 5\n"
    "1 4 2\n"
    "1 6 9\n"
    "2 3 4\n"
    "2 4 3\n"
    "2 5 6\n"
    "3 5 7\n"
    "3 8 8\n"
    "4 5 1\n"
    "4 6 1\n"
    "4 7 5\n"
    "5 7 7\n"
    "5 8 8\n"
    "6 7 2\n"
    "7 8 3\n";

// 19 experts ranking 16 quality indicators. Expert 5's row is not a
// permutation (16 appears twice, 15 never) — kept as recorded.
inline constexpr std::string_view kTable1Csv =
    "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n"
    "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n"
    "9,13,14,10,5,1,6,3,11,15,16,12,7,2,8,4\n"
    "7,1,2,9,10,3,11,15,8,4,5,12,13,6,14,16\n"
    "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n"
    "1,3,5,6,7,8,9,10,2,4,11,12,13,14,16,16\n"
    "11,7,12,13,8,1,2,3,14,9,15,16,10,4,5,6\n"
    "13,11,1,2,3,4,5,14,15,12,6,7,8,9,10,16\n"
    "5,6,1,7,2,8,9,10,11,12,3,13,4,14,15,16\n"
    "15,11,4,6,5,2,10,14,16,12,3,7,9,1,8,13\n"
    "11,10,1,4,12,9,7,6,5,8,3,2,16,14,13,15\n"
    "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n"
    "12,14,13,10,6,2,7,4,11,16,15,9,5,1,8,3\n"
    "8,1,3,9,10,2,12,15,7,5,4,11,13,6,14,16\n"
    "8,1,7,2,11,9,3,10,12,4,15,13,14,5,16,6\n"
    "1,4,11,8,7,10,6,13,2,3,5,9,12,14,15,16\n"
    "14,8,12,11,7,2,3,1,13,10,15,16,9,4,5,6\n"
    "14,11,2,1,4,5,3,13,15,12,6,7,9,8,10,16\n"
    "13,11,3,10,1,12,9,7,6,8,2,5,4,15,14,16\n"
    "15,11,3,7,5,1,10,12,16,14,4,6,9,2,8,13\n";

// Per-indicator mean scores (four-level scale), technical group.
inline constexpr std::string_view kScoresTechCsv =
    "access-convenience,interface-clarity,speed,browser-reliability,collaboration-support,"
    "integration-ease,usefulness\n"
    "2.1,2.4,2.1,2.56,2,2,2.8\n";

// Per-indicator mean scores, psycho-pedagogical group.
inline constexpr std::string_view kScoresPsychCsv =
    "scientific-rigor,accessibility,intellectual-development,problem-orientation,"
    "individualization,adaptivity,methodical-suitability,professional-orientation,feedback\n"
    "2.6,2.7,2.5,2.8,2.8,2.6,2.81,2.75,2.75\n";

}  // namespace opskit::fixtures
