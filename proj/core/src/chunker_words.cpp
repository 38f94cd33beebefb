// Built-in word lists for the noun-phrase chunker. Callers can swap either
// list at runtime via ChunkerConfig::load.

#include <cstddef>

namespace capaug::detail {

extern const char* const kDefaultDeterminers[] = {
    "a", "an", "the",
    "this", "that", "these", "those",
    "my", "your", "his", "her", "its", "our", "their", "whose",
    "some", "any", "each", "every", "no", "another", "both", "all",
    "few", "fewer", "several", "many", "much", "most", "more",
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "twenty", "thirty", "forty", "fifty", "hundred",
};
extern const std::size_t kDefaultDeterminerCount =
    sizeof(kDefaultDeterminers) / sizeof(kDefaultDeterminers[0]);

// Common caption adjectives. Words matching an adjective suffix (-y, -ful,
// -ous, -ish, -ive, -al) need not be listed; short or irregular ones are.
extern const char* const kDefaultAdjectives[] = {
    // colors and shades
    "black", "white", "red", "blue", "green", "yellow", "brown", "pink",
    "purple", "gray", "grey", "golden", "silver", "beige", "tan", "maroon",
    "teal", "turquoise", "violet", "crimson", "scarlet", "navy", "olive",
    "bronze", "copper", "blond", "blonde", "dark", "light", "bright", "pale",
    "colorful", "colourful", "vivid", "vibrant", "neon", "pastel",
    // size and shape
    "small", "big", "large", "huge", "giant", "tiny", "little", "tall",
    "short", "long", "wide", "narrow", "thick", "thin", "slim", "skinny",
    "fat", "chubby", "plump", "massive", "enormous", "miniature", "compact",
    "oversized", "medium", "mini", "round", "square", "rectangular",
    "circular", "oval", "triangular", "curved", "straight", "crooked",
    "bent", "twisted", "pointed", "pointy", "sharp", "blunt", "flat",
    "steep", "sloped", "vertical", "horizontal", "diagonal", "parallel",
    // age and condition
    "old", "young", "new", "ancient", "modern", "vintage", "antique", "aged",
    "elderly", "recent", "contemporary", "retro", "classic", "clean",
    "dirty", "messy", "neat", "tidy", "dusty", "muddy", "filthy", "spotless",
    "polished", "rusty", "rusted", "stained", "faded", "worn", "torn",
    "ripped", "broken", "cracked", "chipped", "shattered", "damaged",
    "wrecked", "ruined", "crumpled", "wrinkled", "parked", "stuffed",
    // texture and material
    "smooth", "rough", "soft", "hard", "fuzzy", "furry", "fluffy", "hairy",
    "feathered", "scaly", "slick", "shiny", "glossy", "matte", "sparkly",
    "glittery", "metallic", "metal", "wooden", "woolen", "plastic",
    "ceramic", "striped", "spotted", "checkered", "plaid", "patterned",
    "floral", "dotted", "printed", "embroidered", "decorated", "ornate",
    "plain", "fancy", "elegant", "stylish", "fashionable", "trendy", "chic",
    "formal", "casual",
    // moods and character
    "happy", "sad", "angry", "excited", "bored", "tired", "sleepy", "drowsy",
    "cheerful", "joyful", "gleeful", "grumpy", "upset", "surprised",
    "shocked", "amazed", "confused", "curious", "playful", "serious", "calm",
    "peaceful", "relaxed", "nervous", "anxious", "scared", "frightened",
    "terrified", "brave", "proud", "shy", "content", "delighted", "friendly",
    "hostile", "fierce", "aggressive", "gentle", "vicious", "wild",
    "domestic", "tame", "feral", "stray", "smart", "clever", "intelligent",
    "wise", "dumb", "silly", "goofy", "funny", "weird", "strange", "odd",
    "unusual", "normal", "typical", "common", "rare", "unique", "ordinary",
    "standard", "cute", "adorable", "pretty", "beautiful", "gorgeous",
    "handsome", "lovely", "attractive", "ugly", "hideous",
    // temperature, weather, food
    "hot", "cold", "warm", "cool", "freezing", "frozen", "icy", "chilly",
    "boiling", "steaming", "burnt", "burned", "toasted", "baked", "fried",
    "grilled", "roasted", "cooked", "raw", "fresh", "stale", "rotten",
    "ripe", "unripe", "juicy", "sweet", "sour", "bitter", "salty", "spicy",
    "tasty", "delicious", "yummy", "savory", "bland", "crispy", "crunchy",
    "creamy", "cheesy", "glazed", "frosted", "iced", "powdered", "sliced",
    "diced", "chopped", "peeled", "healthy", "organic", "vegetarian",
    "vegan", "wet", "dry", "damp", "moist", "soaked", "soggy", "sunny",
    "cloudy", "rainy", "snowy", "foggy", "misty", "stormy", "windy",
    "overcast", "clear", "hazy", "humid", "dim", "dull", "shadowy",
    "gloomy", "murky", "grassy", "sandy", "rocky", "leafy", "bushy",
    "wooded", "forested",
    // pace, state, build
    "fast", "quick", "rapid", "speedy", "swift", "slow", "sluggish", "busy",
    "crowded", "empty", "full", "packed", "deserted", "abandoned", "vacant",
    "occupied", "open", "closed", "locked", "heavy", "lightweight", "sturdy",
    "fragile", "delicate", "flimsy", "solid", "hollow", "dense", "loud",
    "quiet", "silent", "noisy", "single", "double", "triple", "lone",
    "lonely", "solitary", "extra", "spare", "strong", "weak", "powerful",
    "mighty", "athletic", "sporty", "energetic", "active", "lazy", "fit",
    "slender", "petite", "muscular", "bald", "bearded", "curly", "wavy",
    "braided", "tattooed", "barefoot", "shirtless",
    // provenance and setting
    "upper", "lower", "inner", "outer", "nearby", "distant", "northern",
    "southern", "eastern", "western", "central", "local", "urban", "rural",
    "suburban", "coastal", "tropical", "public", "private", "official",
    "fake", "real", "professional", "amateur", "skilled", "talented",
    "asian", "american", "european", "african", "chinese", "japanese",
    "italian", "french", "german", "english", "indian", "mexican",
    // devices and misc
    "electric", "electronic", "digital", "mechanical", "electrical",
    "automatic", "wireless", "portable", "foldable", "inflatable",
    "comfortable", "cozy", "cramped", "spacious", "roomy", "expensive",
    "cheap", "luxurious", "valuable", "worthless", "dangerous", "safe",
    "risky", "careful", "careless", "homeless", "endless", "harmless",
    "grand", "great", "good", "bad", "nice", "fine", "excellent", "perfect",
    "wonderful", "amazing", "awesome", "incredible", "fantastic",
    "horrible", "terrible", "awful", "early", "late", "assorted", "mixed",
    "different", "similar", "matching", "identical", "lit", "unlit",
    "illuminated", "glowing", "flaming", "smoky", "foamy", "bubbly",
    "fizzy", "overgrown", "trimmed", "mowed", "manicured", "sleeveless",
    "various",
};
extern const std::size_t kDefaultAdjectiveCount =
    sizeof(kDefaultAdjectives) / sizeof(kDefaultAdjectives[0]);

}  // namespace capaug::detail
