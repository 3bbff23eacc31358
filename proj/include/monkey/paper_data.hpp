#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

// Published random-typing measurements (ten tests, prefixes "T" .. "To be")
// and the soliloquy text. Mirrors the CSV/TXT fixtures under data/.

namespace monkey::paper {

inline constexpr std::size_t kTests = 10;
inline constexpr std::size_t kPrefixes = 5;

inline constexpr std::array<std::array<std::uint64_t, kPrefixes>, kTests> kAttempts = {{
    {25, 10229, 38827, 8955744, 42829442},
    {53, 4789, 113541, 4847370, 303572721},
    {24, 5736, 441804, 6807107, 608799906},
    {42, 715, 88579, 3679657, 127959953},
    {89, 25, 539995, 2240406, 147686698},
    {10, 2955, 50155, 7904165, 51964918},
    {96, 1240, 48652, 894774, 1158891356},
    {35, 3224, 12451, 28259478, 437532894},
    {26, 1704, 84944, 1797972, 429123405},
    {197, 394, 172787, 15580549, 145448105},
}};

inline constexpr std::array<std::array<double, kPrefixes>, kTests> kSeconds = {{
    {0.000, 0.020, 0.081, 25.119, 136.459},
    {0.000, 0.008, 0.240, 13.809, 965.445},
    {0.000, 0.010, 0.977, 18.906, 1934.305},
    {0.000, 0.001, 0.216, 10.124, 406.273},
    {0.000, 0.000, 1.173, 6.451, 469.469},
    {0.000, 0.005, 0.111, 21.793, 165.245},
    {0.000, 0.002, 0.101, 2.341, 3681.907},
    {0.000, 0.006, 0.027, 77.481, 1389.464},
    {0.000, 0.004, 0.285, 5.130, 1363.543},
    {0.000, 0.001, 0.385, 42.391, 462.892},
}};

/// Printed average rows (rounded as published).
inline constexpr std::array<std::uint64_t, kPrefixes> kAttemptsAverageRow = {60, 3101, 159174, 8096722, 345380940};
inline constexpr std::array<double, kPrefixes> kSecondsAverageRow = {0.000, 0.006, 0.360, 22.355, 1097.500};

/// Base lists of the geometric projection.
inline constexpr std::array<double, kPrefixes> kAttemptsBase = {60, 3101, 159174, 8096722, 345380940};
inline constexpr std::array<double, kPrefixes> kTimesBase = {0.0001, 0.0060, 0.3600, 22.3550, 1097.5000};

/// Headline figures as printed, for side-by-side reporting.
inline constexpr double kFinalAttempts = 2.68e69;
inline constexpr double kFinalSeconds = 2.95e66;
inline constexpr double kFinalHours = 8.18e62;
inline constexpr double kFinalYears = 9.32e55;
inline constexpr double kUniverseRatio = 6.75e45;

inline constexpr std::string_view kHamletSoliloquy =
R"corpus(To be, or not to be, that is the Question:
Whether 'tis Nobler in the mind to suffer
The Slings and Arrows of outrageous Fortune,
Or to take Armes against a Sea of troubles,
And by opposing end them: to dye, to sleep
No more; and by a sleep, to say we end
The Heart-ake, and the thousand Naturall fhockes
That Flesh is heyre too? 'Tis a consummation
Deuoutly to be wifh'd. To dye to sleepe,
To sleep, perchance to Dream; I, there's the rub,
For in that sleep of death, what dreams may come,
When we haue fhuffel'd off this mortall coile,
Must giue us pause. There's the respect
That makes Calamity of so long life:
For who would beare the Whips and Scornes of time,
The Oppressors wrong, the poore mans Contumely,
The pangs of dispriz'd Loue, the Lawes delay,
The infolence of Office, and the Spurnes
That patient merit of the unworthy takes,
When he himselfe might his Quietus make
With a bare Bodkin? Who would these Fardles beare
To grunt and sweate vnder a weary life,
But that the dread of something after death,
The vndiscovered Countrey, from whose Borne
No Traueller returnes, Puzels the will,
And makes vs rather beare those illes we haue,
Then flye to others that we know not of.
Thus Conscience does make Cowards of vs all,
And thus the Natiue hew of Resolution
Is sicklied o're, with the pale cast of Thought,
And enterprizes of great pith and moment,
With this regard their Currants turne away,
And loofe the name of Action. Soft you now,
The faire Ophelia? Nimph, in thy Orizons
Be all my finnes remembred.
)corpus";

}  // namespace monkey::paper
