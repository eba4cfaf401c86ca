"""Schemas for the 21 simulated task families.

Each family is written in a compact string form and expanded once at import.

Tool params: ``name[:type]=source`` where source is ``@`` (the task entity),
``tool.field`` (a field of an earlier tool's response) or ``#literal``.
Tool fields: ``name:kind[:args]``, kinds understood by ``fabric.generate_field``.
Metrics: ``tool.field:weight:cap`` terms, summed as weighted capped ratios.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

ENTITY = "@"


@dataclass(frozen=True)
class Param:
    name: str
    type: str  # string | number | list | record
    source: str  # "@", "tool.field" or "#<json literal>"

    @property
    def is_entity(self) -> bool:
        return self.source == ENTITY

    @property
    def chained(self) -> tuple[str, str] | None:
        if self.source == ENTITY or self.source.startswith("#"):
            return None
        tool, fld = self.source.split(".", 1)
        return tool, fld

    @property
    def constant(self):
        return json.loads(self.source[1:]) if self.source.startswith("#") else None


@dataclass(frozen=True)
class FieldSpec:
    name: str
    kind: str
    args: tuple = ()


@dataclass(frozen=True)
class ToolDef:
    name: str
    title: str
    description: str
    params: tuple[Param, ...]
    fields: tuple[FieldSpec, ...]

    @property
    def field_names(self) -> list[str]:
        return [f.name for f in self.fields]

    def signature(self) -> str:
        return f"{self.name}(" + ", ".join(p.name for p in self.params) + ")"


@dataclass(frozen=True)
class Metric:
    """Weighted capped score: offset + scale * sum(w * min(v, cap) / cap), rounded half-up."""
    name: str
    terms: tuple[tuple[str, str, float, float], ...]  # (tool, field, weight, cap)
    scale: float = 100
    digits: int = 1
    offset: float = 0
    label: str = ""

    @property
    def tools(self) -> set[str]:
        return {t for t, _, _, _ in self.terms}


@dataclass(frozen=True)
class Band:
    """Label chosen by the first threshold the source value reaches (thresholds descend)."""
    name: str
    source: str  # a metric name, or "tool.field"
    cuts: tuple[tuple[float, str], ...]
    default: str = ""
    label: str = ""


@dataclass(frozen=True)
class Family:
    slug: str
    title: str
    noun: str
    plural: str
    objective: str
    output_file: str
    entities: tuple[str, ...]
    tools: tuple[ToolDef, ...]
    metrics: tuple = ()
    bands: tuple = ()

    @property
    def tool_names(self) -> list[str]:
        return [t.name for t in self.tools]

    def tool(self, name: str) -> ToolDef:
        for t in self.tools:
            if t.name == name:
                return t
        raise KeyError(name)

    def band_tools(self, band: Band) -> set[str]:
        for m in self.metrics:
            if m.name == band.source:
                return m.tools
        return {band.source.split(".", 1)[0]}

    def active_metrics(self, tools) -> list[Metric]:
        have = set(tools)
        return [m for m in self.metrics if m.tools <= have]

    def active_bands(self, tools) -> list[Band]:
        have = set(tools)
        return [b for b in self.bands if self.band_tools(b) <= have]


# -- compact schema parsing ---------------------------------------------------------

def _params(text: str) -> tuple[Param, ...]:
    out = []
    for item in text.split():
        lhs, source = item.split("=", 1)
        name, _, ptype = lhs.partition(":")
        out.append(Param(name, ptype or "string", source))
    return tuple(out)


def _fields(text: str) -> tuple[FieldSpec, ...]:
    out = []
    for item in text.split():
        name, kind, *args = item.split(":")
        out.append(FieldSpec(name, kind, tuple(args)))
    return tuple(out)


def T(name, title, description, params, fields) -> ToolDef:
    return ToolDef(name, title, description, _params(params), _fields(fields))


def M(name, terms, label, scale=100, digits=1, offset=0) -> Metric:
    parsed = []
    for term in terms.split():
        ref, w, cap = term.split(":")
        tool, fld = ref.split(".")
        parsed.append((tool, fld, float(w), float(cap)))
    return Metric(name, tuple(parsed), scale, digits, offset, label)


def B(name, source, cuts, default, label) -> Band:
    pairs = []
    for c in cuts.split(","):
        at, lab = c.split("=")
        pairs.append((float(at), lab))
    return Band(name, source, tuple(pairs), default, label)


FAMILIES: dict[str, Family] = {}


def _register(f: Family):
    FAMILIES[f.slug] = f


_register(Family(
    "cat-facts-collector", "Cat Facts Collector", "breed", "cat breeds",
    "Create encyclopedia entries for {n} cat breeds ({names}) using {m} API endpoints per breed.",
    "cat_encyclopedia.json",
    ("Persian", "Siamese", "Maine Coon", "Bengal", "Ragdoll", "Sphynx", "Abyssinian",
     "British Shorthair", "Scottish Fold", "Birman"),
    (
        T("breed_profile", "Breed Profile", "Get breed info and characteristics", "breed_name=@",
          "origin:pick:countries temperament:pick:temperaments life_span:range:8:20 "
          "weight_kg:float:2.5:9.5:1 coat_type:pick:coat_types"),
        T("breed_relatives", "Country Relatives", "List breeds from same country",
          "country=breed_profile.origin",
          "breed_count:int:2:14 related_breeds:sample:cat_breeds:3 region:pick:regions"),
        T("breed_coat_family", "Coat Family", "List breeds with similar coat",
          "coat_type=breed_profile.coat_type",
          "coat_length:pick:lengths grooming_level:int:1:5 similar_breeds:sample:cat_breeds:3"),
        T("breed_facts", "Breed Facts", "Get notable facts about the breed", "breed_name=@",
          "fact_count:int:3:12 top_fact:phrase:facts:6 fun_rating:int:1:10"),
        T("breed_encyclopedia", "Encyclopedia Entry", "Get the long-form encyclopedia entry",
          "breed_name=@",
          "summary:phrase:facts:8 recognized_since:int:1870:2005 rarity:pick:rarity"),
    ),
    (M("size_index", "breed_profile.weight_kg:1:10", "size index (0-100) = weight_kg capped at 10, scaled to 100"),),
    (B("size_class", "size_index", "70=large,40=medium", "small", "size class: large (>=70), medium (40-70), small (<40)"),),
))

_register(Family(
    "cocktail-menu-generator", "Cocktail Menu Generator", "cocktail", "classic cocktails",
    "Create a cocktail menu for {n} classic cocktails ({names}) using {m} API endpoints per cocktail.",
    "cocktail_menu.json",
    ("Margarita", "Mojito", "Old Fashioned", "Martini", "Negroni", "Daiquiri", "Manhattan",
     "Cosmopolitan", "Mai Tai", "Whiskey Sour"),
    (
        T("search", "Search", "Search cocktail by name", "name=@",
          "id:int:11000:17999 category:pick:cocktail_categories glass:pick:glasses "
          "main_ingredient:pick:spirits"),
        T("details", "Details", "Get full recipe and instructions", "id:number=search.id",
          "ingredient_count:int:2:8 ingredients:sample:mixers:3 instructions:phrase:steps:7"),
        T("by_ingredient", "By Ingredient", "List cocktails with ingredient",
          "ingredient=search.main_ingredient",
          "cocktail_count:int:4:60 top_matches:sample:cocktail_names:3"),
        T("by_category", "By Category", "List cocktails in category", "category=search.category",
          "cocktail_count:int:5:120 top_matches:sample:cocktail_names:3"),
        T("by_glass", "By Glass", "List cocktails served in the same glass", "glass=search.glass",
          "cocktail_count:int:3:80 glass_volume_ml:int:90:450"),
    ),
    (M("prep_time_minutes", "details.ingredient_count:1:8",
       "estimated prep time (minutes) = 2 + 12 * min(ingredient_count, 8) / 8", scale=12, offset=2),),
    (B("complexity_rating", "details.ingredient_count", "6=Complex,4=Medium", "Easy",
       "complexity rating: Complex (>=6 ingredients), Medium (4-5), Easy (<4)"),),
))

_register(Family(
    "gitlab-deep-analysis", "GitLab Deep Analysis", "project", "GitLab repositories",
    "Perform a comprehensive analysis of {n} GitLab repositories ({names}) using {m} API endpoints per project.",
    "gitlab_analysis_results.json",
    ("gitlab-runner", "gitaly", "gitlab-pages", "gitlab-shell", "cli", "gitlab-workhorse",
     "gitlab-development-kit", "gitlab-docs", "omnibus-gitlab", "charts"),
    (
        T("get_project_info", "Project Info", "Get project details (stars, forks, description)",
          "project_path=@",
          "stars:int:50:9000 forks:int:10:2500 description:phrase:software:6 default_branch:pick:branch_names"),
        T("get_contributors", "Contributors", "Get contributor list", "project_path=@",
          "contributor_count:int:3:400 top_contributors:sample:developers:5 top_commit_count:int:40:3000"),
        T("get_commits", "Recent Commits", "Get commit history", "project_path=@ limit:number=#20",
          "commit_count:int:5:20 latest_author:pick:developers latest_date:date"),
        T("get_branches", "Branches", "Get branch information", "project_path=@",
          "branch_count:int:2:60 protected_count:int:1:6 stale_count:int:1:30"),
        T("get_issues", "Issues", "Get issue list", "project_path=@",
          "open_count:int:1:300 recent_titles:sample:issue_titles:3 closed_ratio:float:0.1:0.95:2"),
        T("get_merge_requests", "Merge Requests", "Get merge request activity", "project_path=@",
          "open_mrs:int:1:80 merged_last_month:int:1:120 avg_review_hours:float:1:96:1"),
    ),
    (
        M("popularity_score", "get_project_info.stars:0.7:5000 get_project_info.forks:0.3:1000",
          "popularity score (0-100) based on stars (70%, cap 5000) and forks (30%, cap 1000)"),
        M("activity_score",
          "get_commits.commit_count:0.4:20 get_contributors.contributor_count:0.3:100 "
          "get_issues.open_count:0.2:100 get_branches.branch_count:0.1:20",
          "activity score (0-100) based on commits (40%, cap 20), contributors (30%, cap 100), "
          "issues (20%, cap 100), branches (10%, cap 20)"),
    ),
    (B("health_status", "activity_score", "70=healthy,40=moderate", "inactive",
       "health status: healthy (>=70), moderate (40-70), inactive (<40)"),),
))

_register(Family(
    "countries-encyclopedia", "Countries Encyclopedia", "country", "countries",
    "Build encyclopedia profiles for {n} countries ({names}) using {m} API endpoints per country.",
    "countries_encyclopedia.json",
    ("Japan", "Brazil", "Kenya", "Germany", "Canada", "India", "Australia", "Mexico", "Norway", "Egypt"),
    (
        T("country_info", "Country Info", "Get capital, population, area and region", "name=@",
          "capital:pick:cities population_millions:float:0.5:1400:1 area_km2:int:10000:9900000 "
          "region:pick:regions"),
        T("country_languages", "Languages", "List official languages", "name=@",
          "official_languages:sample:languages:2 language_count:int:1:12 primary_language:pick:languages"),
        T("country_currency", "Currency", "Get currency details", "name=@",
          "currency_code:pick:currency_codes currency_name:pick:currencies symbol:pick:symbols"),
        T("country_neighbors", "Regional Neighbors", "List countries in the same region",
          "region=country_info.region", "neighbor_count:int:1:14 neighbors:sample:country_names:3"),
        T("country_timezones", "Timezones", "Get timezones for the capital",
          "capital=country_info.capital", "timezone_count:int:1:12 utc_offset:pick:utc_offsets"),
    ),
    (M("size_score", "country_info.population_millions:0.5:200 country_info.area_km2:0.5:2000000",
       "size score (0-100) based on population (50%, cap 200M) and area (50%, cap 2,000,000 km2)"),),
    (B("size_class", "size_score", "60=large,30=medium", "small", "size class: large (>=60), medium (30-60), small (<30)"),),
))

_register(Family(
    "dnd-campaign-builder", "D&D Campaign Builder", "class", "character classes",
    "Prepare campaign reference sheets for {n} character classes ({names}) using {m} API endpoints per class.",
    "campaign_builder.json",
    ("wizard", "fighter", "rogue", "cleric", "paladin", "ranger", "bard", "druid", "monk", "warlock"),
    (
        T("get_class", "Class Basics", "Get hit die, abilities and saving throws", "class_index=@",
          "hit_die:int:6:12 primary_ability:pick:abilities saving_throws:sample:abilities:2 "
          "spellcasting_ability:pick:abilities"),
        T("get_class_levels", "Level Progression", "Get level progression summary", "class_index=@",
          "feature_count:int:8:30 spell_slots_max:int:1:9 subclass_count:int:1:8"),
        T("get_spells", "Spells", "List spells keyed to an ability", "ability=get_class.spellcasting_ability",
          "spell_count:int:5:120 top_spells:sample:spells:3"),
        T("get_equipment", "Starting Equipment", "Get starting equipment", "class_index=@",
          "starting_items:sample:equipment:3 equipment_value_gp:int:10:200"),
        T("get_proficiencies", "Proficiencies", "List skill proficiencies for an ability",
          "ability=get_class.primary_ability", "skill_choices:int:2:4 proficiencies:sample:skills:3"),
        T("get_subclasses", "Subclasses", "Get featured subclass", "class_index=@",
          "subclass_name:pick:subclasses flavor:phrase:fantasy:6"),
    ),
    (M("durability", "get_class.hit_die:1:12", "durability (0-10) = hit_die / 12 scaled to 10", scale=10),),
    (B("party_role", "durability", "9=frontline,7=skirmisher", "support",
       "party role: frontline (>=9), skirmisher (7-9), support (<7)"),),
))

_register(Family(
    "dnd-monster-compendium", "D&D Monster Compendium", "monster", "monsters",
    "Compile compendium entries for {n} monsters ({names}) using {m} API endpoints per monster.",
    "monster_compendium.json",
    ("goblin", "adult-red-dragon", "beholder", "lich", "owlbear", "mind-flayer", "troll", "kraken",
     "basilisk", "gelatinous-cube"),
    (
        T("get_monster", "Stat Block", "Get challenge rating, hit points and armor class", "monster_index=@",
          "challenge_rating:int:1:24 hit_points:int:7:500 armor_class:int:10:22 monster_type:pick:monster_types"),
        T("get_monster_actions", "Actions", "Get the monster's actions", "monster_index=@",
          "action_count:int:1:6 signature_action:pick:actions max_damage:int:4:90"),
        T("get_type_info", "Type Info", "Get information about the creature type",
          "monster_type=get_monster.monster_type", "type_count:int:5:80 common_traits:sample:traits:2"),
        T("get_resistances", "Resistances", "Get damage resistances and immunities", "monster_index=@",
          "resistance_count:int:1:6 resistances:sample:damage_types:2 immunity:pick:damage_types"),
        T("get_habitat", "Habitat", "Get habitats for the creature type",
          "monster_type=get_monster.monster_type", "habitats:sample:habitats:2 rarity:pick:rarity"),
        T("get_loot", "Loot Table", "Get typical loot for a challenge rating",
          "challenge_rating:number=get_monster.challenge_rating",
          "loot_value_gp:int:10:20000 loot_item:pick:equipment"),
    ),
    (M("threat_score", "get_monster.challenge_rating:0.5:20 get_monster.hit_points:0.3:300 "
       "get_monster.armor_class:0.2:22",
       "threat score (0-100) based on challenge rating (50%, cap 20), hit points (30%, cap 300), "
       "armor class (20%, cap 22)"),),
    (B("threat_tier", "threat_score", "70=deadly,40=hard", "easy", "threat tier: deadly (>=70), hard (40-70), easy (<40)"),),
))

_register(Family(
    "dog-breeds-encyclopedia", "Dog Breeds Encyclopedia", "breed", "dog breeds",
    "Create encyclopedia entries for {n} dog breeds ({names}) using {m} API endpoints per breed.",
    "dog_encyclopedia.json",
    ("labrador", "beagle", "husky", "poodle", "boxer", "dalmatian", "corgi", "shiba", "akita", "collie"),
    (
        T("breed_info", "Breed Info", "Get group, size and life span", "breed=@",
          "group:pick:dog_groups height_cm:int:20:85 weight_kg:float:2:80:1 life_span:range:8:16"),
        T("breed_images", "Images", "Get image gallery summary", "breed=@",
          "image_count:int:5:200 sample_image:pick:image_files"),
        T("sub_breeds", "Sub-breeds", "List sub-breeds", "breed=@",
          "sub_breed_count:int:1:6 sub_breeds:sample:dog_variants:2"),
        T("group_members", "Group Members", "List breeds in the same group", "group=breed_info.group",
          "member_count:int:10:60 notable_members:sample:dog_breeds:3"),
        T("breed_traits", "Traits", "Get energy, trainability and shedding", "breed=@",
          "energy_level:int:1:5 trainability:int:1:5 shedding:pick:levels"),
    ),
    (M("size_score", "breed_info.height_cm:0.5:80 breed_info.weight_kg:0.5:70",
       "size score (0-100) based on height (50%, cap 80 cm) and weight (50%, cap 70 kg)"),),
    (B("size_class", "size_score", "60=large,30=medium", "small", "size class: large (>=60), medium (30-60), small (<30)"),),
))

_register(Family(
    "jikan-anime-analysis", "Jikan Anime Analysis", "anime", "anime series",
    "Analyze {n} anime series ({names}) using {m} API endpoints per series.",
    "anime_analysis.json",
    ("Cowboy Bebop", "Fullmetal Alchemist", "Steins;Gate", "Mob Psycho 100", "Attack on Titan",
     "Spirited Away", "Death Note", "Haikyuu", "Frieren", "Vinland Saga"),
    (
        T("anime_search", "Search", "Find the anime and its headline stats", "title=@",
          "mal_id:int:1:60000 score:float:5.5:9.3:2 episodes:int:1:500 studio:pick:studios"),
        T("anime_details", "Details", "Get genres, air year and rating", "mal_id:number=anime_search.mal_id",
          "genres:sample:genres:2 aired_year:int:1985:2024 rating:pick:age_ratings"),
        T("anime_characters", "Characters", "Get character roster summary", "mal_id:number=anime_search.mal_id",
          "character_count:int:5:120 main_character:pick:character_names"),
        T("anime_staff", "Staff", "Get staff summary", "mal_id:number=anime_search.mal_id",
          "staff_count:int:10:200 director:pick:people"),
        T("anime_statistics", "Statistics", "Get viewer statistics", "mal_id:number=anime_search.mal_id",
          "members:int:1000:3900000 completed:int:500:2500000 dropped:int:100:300000"),
    ),
    (M("acclaim_index", "anime_search.score:0.7:10 anime_search.episodes:0.3:100",
       "acclaim index (0-100) based on score (70%, cap 10) and episodes (30%, cap 100)"),),
    (B("tier", "acclaim_index", "75=masterpiece,55=solid", "niche", "tier: masterpiece (>=75), solid (55-75), niche (<55)"),),
))

_register(Family(
    "jsonplaceholder-analyzer", "JSONPlaceholder Analyzer", "user", "users",
    "Produce activity reports for {n} users ({names}) using {m} API endpoints per user.",
    "user_activity_report.json",
    ("Bret", "Antonette", "Samantha", "Karianne", "Kamren", "Leopoldo_Corkery", "Elwyn.Skiles",
     "Maxime_Nienow", "Delphine", "Moriah.Stanton"),
    (
        T("get_user", "User", "Get user record", "username=@",
          "user_id:int:1:10 city:pick:cities company:pick:companies email:email"),
        T("get_posts", "Posts", "Get the user's posts", "user_id:number=get_user.user_id",
          "post_count:int:1:10 avg_body_words:int:20:80 latest_title:phrase:lorem:5"),
        T("get_todos", "Todos", "Get the user's todo list", "user_id:number=get_user.user_id",
          "todo_count:int:5:20 completed_count:int:1:20 completion_rate:float:0.05:1:2"),
        T("get_albums", "Albums", "Get the user's albums", "user_id:number=get_user.user_id",
          "album_count:int:1:10 photo_count:int:10:500"),
        T("get_comments", "Comments", "Get comments on the user's posts", "user_id:number=get_user.user_id",
          "comment_count:int:5:50 unique_commenters:int:2:30"),
        T("get_company", "Company", "Get company profile", "company=get_user.company",
          "catch_phrase:phrase:lorem:4 employees:int:10:5000"),
        T("get_address", "Address", "Get postal address", "user_id:number=get_user.user_id",
          "street:pick:streets zipcode:int:10000:99999 geo_lat:float:1:80:4"),
    ),
    (M("engagement_score", "get_posts.post_count:0.5:10 get_todos.completion_rate:0.5:1",
       "engagement score (0-100) based on posts (50%, cap 10) and todo completion rate (50%)"),),
    (B("engagement_level", "engagement_score", "70=high,40=medium", "low",
       "engagement level: high (>=70), medium (40-70), low (<40)"),),
))

_register(Family(
    "local-dna-analysis", "Local DNA Analysis", "gene", "gene sequences",
    "Run sequence analysis for {n} genes ({names}) using {m} analysis endpoints per gene.",
    "dna_analysis_report.json",
    ("BRCA1", "TP53", "EGFR", "KRAS", "MYC", "APOE", "CFTR", "HBB", "INS", "GAPDH"),
    (
        T("sequence_stats", "Sequence Stats", "Get length, GC content and chromosome", "gene=@",
          "length_bp:int:500:20000 gc_content:float:0.3:0.7:3 chromosome:pick:chromosomes"),
        T("find_orfs", "Open Reading Frames", "Find open reading frames", "gene=@",
          "orf_count:int:1:25 longest_orf_bp:int:90:6000"),
        T("motif_scan", "Motif Scan", "Scan for regulatory motifs", "gene=@",
          "motif_hits:int:1:40 top_motif:pick:motifs"),
        T("translate", "Translation", "Translate the coding sequence", "gene=@",
          "protein_length:int:30:2000 first_residues:pick:residues"),
        T("mutation_check", "Mutation Check", "Check known variants", "gene=@",
          "variant_count:int:1:60 pathogenic_count:int:1:10"),
    ),
    (M("gc_score", "sequence_stats.gc_content:1:1", "GC score (0-100) = gc_content * 100"),),
    (B("gc_class", "gc_score", "55=gc-rich,45=balanced", "at-rich", "GC class: gc-rich (>=55), balanced (45-55), at-rich (<45)"),),
))

_register(Family(
    "name-demographics", "Name Demographics", "name", "first names",
    "Profile the demographics of {n} first names ({names}) using {m} API endpoints per name.",
    "name_demographics.json",
    ("Emma", "Liam", "Olivia", "Noah", "Sofia", "Mateo", "Aisha", "Kenji", "Ingrid", "Diego"),
    (
        T("predict_gender", "Gender", "Predict gender from a first name", "name=@",
          "gender:pick:genders probability:float:0.5:0.99:2 sample_size:int:100:500000"),
        T("predict_age", "Age", "Predict age from a first name", "name=@",
          "age:int:18:80 age_count:int:100:300000"),
        T("predict_nationality", "Nationality", "Predict nationality from a first name", "name=@",
          "top_country:pick:country_codes country_probability:float:0.05:0.9:2"),
        T("name_popularity", "Popularity", "Get popularity in a country", "country=predict_nationality.top_country",
          "rank:int:1:1000 births_per_year:int:50:30000"),
        T("name_origin", "Origin", "Get etymology", "name=@",
          "origin_language:pick:languages meaning:phrase:meanings:3"),
    ),
    (M("confidence_score", "predict_gender.probability:0.6:1 predict_gender.sample_size:0.4:100000",
       "confidence score (0-100) based on probability (60%) and sample size (40%, cap 100000)"),),
    (B("reliability", "confidence_score", "70=high,40=medium", "low", "reliability: high (>=70), medium (40-70), low (<40)"),),
))

_register(Family(
    "open-meteo-weather", "Open-Meteo Weather", "city", "cities",
    "Produce weather briefings for {n} cities ({names}) using {m} API endpoints per city.",
    "weather_report.json",
    ("Tokyo", "Berlin", "Nairobi", "Lima", "Oslo", "Sydney", "Toronto", "Mumbai", "Cairo", "Reykjavik"),
    (
        T("geocode", "Geocoding", "Resolve city coordinates", "city=@",
          "latitude:float:1:70:4 longitude:float:1:170:4 country:pick:countries elevation_m:int:1:2500"),
        T("current_weather", "Current Weather", "Get current conditions",
          "latitude:number=geocode.latitude longitude:number=geocode.longitude",
          "temperature_c:float:1:38:1 wind_speed_kmh:float:1:60:1 weather_code:int:1:99"),
        T("daily_forecast", "Daily Forecast", "Get the 7-day forecast",
          "latitude:number=geocode.latitude longitude:number=geocode.longitude",
          "max_temp_c:float:5:40:1 min_temp_c:float:1:20:1 precipitation_mm:float:0.1:40:1"),
        T("air_quality", "Air Quality", "Get air quality index",
          "latitude:number=geocode.latitude longitude:number=geocode.longitude",
          "aqi:int:5:180 pm2_5:float:1:90:1"),
        T("historical_average", "Climate Normals", "Get long-run averages", "city=@",
          "avg_temp_c:float:1:30:1 annual_rain_mm:int:100:3000"),
    ),
    (M("exposure_index", "current_weather.temperature_c:0.6:35 current_weather.wind_speed_kmh:0.4:50",
       "exposure index (0-100) based on temperature (60%, cap 35 C) and wind speed (40%, cap 50 km/h)"),),
    (B("exposure", "exposure_index", "70=harsh,40=moderate", "mild", "exposure: harsh (>=70), moderate (40-70), mild (<40)"),),
))

_register(Family(
    "pokeapi-pokedex", "PokeAPI Pokedex", "pokemon", "Pokemon",
    "Build Pokedex entries for {n} Pokemon ({names}) using {m} API endpoints per Pokemon.",
    "pokedex.json",
    ("pikachu", "bulbasaur", "charmander", "squirtle", "eevee", "gengar", "snorlax", "lucario",
     "gyarados", "mewtwo"),
    (
        T("get_pokemon", "Pokemon", "Get base data", "pokemon=@",
          "pokedex_id:int:1:1010 primary_type:pick:poke_types base_experience:int:36:340 height_dm:int:1:60"),
        T("get_species", "Species", "Get species data", "pokemon=@",
          "habitat:pick:poke_habitats capture_rate:int:3:255 is_legendary:bool"),
        T("get_type", "Type Matchups", "Get matchups for a type", "type_name=get_pokemon.primary_type",
          "weak_to:sample:poke_types:2 strong_against:sample:poke_types:2"),
        T("get_evolution", "Evolution", "Get the evolution chain", "pokemon=@",
          "stage_count:int:1:3 next_form:pick:pokemon_names"),
        T("get_moves", "Moves", "Get learnable moves", "pokemon=@",
          "move_count:int:20:110 signature_move:pick:moves"),
    ),
    (M("battle_score", "get_pokemon.base_experience:1:340", "battle score (0-100) = base_experience / 340 scaled to 100"),),
    (B("tier", "battle_score", "70=elite,40=standard", "starter", "tier: elite (>=70), standard (40-70), starter (<40)"),),
))

_register(Family(
    "random-user-database", "Random User Database", "nationality", "nationalities",
    "Assemble synthetic user panels for {n} nationalities ({names}) using {m} API endpoints per nationality.",
    "random_users.json",
    ("us", "gb", "fr", "de", "br", "au", "ca", "es", "nl", "nz"),
    (
        T("generate_users", "Users", "Generate a user batch", "nat=@",
          "user_count:int:5:50 sample_user:pick:people avg_age:int:20:70"),
        T("user_locations", "Locations", "Summarize user locations", "nat=@",
          "top_city:pick:cities city_count:int:2:30"),
        T("user_demographics", "Demographics", "Summarize demographics", "nat=@",
          "female_share:float:0.3:0.7:2 median_age:int:20:60"),
        T("user_contacts", "Contacts", "Summarize contact formats", "nat=@",
          "phone_format:pick:phone_formats email_domain:pick:domains"),
        T("user_logins", "Logins", "Summarize account activity", "nat=@",
          "active_accounts:int:1:50 avg_logins:int:1:400"),
    ),
    (M("panel_score", "generate_users.user_count:0.6:50 generate_users.avg_age:0.4:70",
       "panel score (0-100) based on user count (60%, cap 50) and average age (40%, cap 70)"),),
    (B("panel_size", "panel_score", "70=large,40=medium", "small", "panel size: large (>=70), medium (40-70), small (<40)"),),
))

_register(Family(
    "recipe-cookbook-builder", "Recipe Cookbook Builder", "meal", "meals",
    "Build a cookbook covering {n} meals ({names}) using {m} API endpoints per meal.",
    "cookbook.json",
    ("Arrabiata", "Teriyaki Chicken", "Beef Wellington", "Pad Thai", "Shakshuka", "Moussaka",
     "Ratatouille", "Paella", "Tiramisu", "Biryani"),
    (
        T("search_meal", "Search", "Find meal by name", "meal=@",
          "meal_id:int:52700:53099 category:pick:meal_categories area:pick:cuisines "
          "main_ingredient:pick:foods"),
        T("meal_details", "Details", "Get recipe details", "meal_id:number=search_meal.meal_id",
          "ingredient_count:int:3:20 instruction_steps:int:2:15 prep_minutes:int:10:180"),
        T("meals_by_category", "Same Category", "List meals in category", "category=search_meal.category",
          "meal_count:int:5:90 examples:sample:meal_names:3"),
        T("meals_by_area", "Same Cuisine", "List meals from the same cuisine", "area=search_meal.area",
          "meal_count:int:3:60 examples:sample:meal_names:3"),
        T("ingredient_info", "Main Ingredient", "Get ingredient info", "ingredient=search_meal.main_ingredient",
          "ingredient_type:pick:ingredient_types calories_per_100g:int:15:900"),
        T("random_pairing", "Pairing", "Suggest a pairing from the category", "category=search_meal.category",
          "pairing:pick:meal_names"),
    ),
    (M("difficulty_score", "meal_details.ingredient_count:0.5:20 meal_details.instruction_steps:0.5:15",
       "difficulty score (0-100) based on ingredients (50%, cap 20) and steps (50%, cap 15)"),),
    (B("difficulty", "difficulty_score", "60=hard,35=medium", "easy", "difficulty: hard (>=60), medium (35-60), easy (<35)"),),
))

_register(Family(
    "rick-morty-explorer", "Rick & Morty Explorer", "character", "characters",
    "Explore {n} Rick and Morty characters ({names}) using {m} API endpoints per character.",
    "rick_morty_report.json",
    ("Rick Sanchez", "Morty Smith", "Summer Smith", "Beth Smith", "Jerry Smith", "Birdperson",
     "Squanchy", "Mr. Meeseeks", "Evil Morty", "Unity"),
    (
        T("get_character", "Character", "Get status, species and origin", "character=@",
          "status:pick:char_status species:pick:species episode_count:int:1:51 origin:pick:rm_locations"),
        T("get_location", "Origin Location", "Get location details", "location=get_character.origin",
          "location_type:pick:location_types dimension:pick:dimensions resident_count:int:1:120"),
        T("get_episodes", "Episodes", "Get episode appearances", "character=@",
          "first_episode:pick:episode_codes last_episode:pick:episode_codes episode_span:int:1:50"),
        T("search_species", "Species", "List characters of a species", "species=get_character.species",
          "species_count:int:2:400 notable:sample:rm_chars:2"),
        T("get_relations", "Relations", "Get relationships", "character=@",
          "relation_count:int:1:12 closest:pick:rm_chars"),
    ),
    (M("screen_time", "get_character.episode_count:1:51", "screen time (0-100) = episode_count / 51 scaled to 100"),),
    (B("presence", "screen_time", "60=main,25=recurring", "minor", "presence: main (>=60), recurring (25-60), minor (<25)"),),
))

_register(Family(
    "tvmaze-series-analyzer", "TVMaze Series Analyzer", "show", "TV series",
    "Analyze {n} TV series ({names}) using {m} API endpoints per series.",
    "tv_series_analysis.json",
    ("Breaking Bad", "The Wire", "Fargo", "Succession", "Severance", "Dark", "Sherlock", "Chernobyl",
     "Twin Peaks", "The Expanse"),
    (
        T("search_show", "Show", "Find the show", "show=@",
          "show_id:int:1:70000 network:pick:networks premiered:int:1990:2023 rating:float:5:9.5:1"),
        T("show_seasons", "Seasons", "Get season summary", "show_id:number=search_show.show_id",
          "season_count:int:1:15 total_episodes:int:6:250"),
        T("show_cast", "Cast", "Get cast summary", "show_id:number=search_show.show_id",
          "cast_count:int:5:60 lead_actor:pick:people"),
        T("show_episodes", "Episodes", "Get episode summary", "show_id:number=search_show.show_id",
          "avg_runtime:int:20:70 finale_title:phrase:lorem:3"),
        T("show_crew", "Crew", "Get crew summary", "show_id:number=search_show.show_id",
          "creator:pick:people crew_count:int:10:300"),
    ),
    (M("reception_score", "search_show.rating:0.7:10 show_seasons.season_count:0.3:10",
       "reception score (0-100) based on rating (70%, cap 10) and seasons (30%, cap 10)"),),
    (B("verdict", "reception_score", "75=acclaimed,50=mixed", "weak", "verdict: acclaimed (>=75), mixed (50-75), weak (<50)"),),
))

_register(Family(
    "university-directory", "University Directory", "university", "universities",
    "Compile directory entries for {n} universities ({names}) using {m} API endpoints per university.",
    "university_directory.json",
    ("MIT", "Stanford University", "University of Tokyo", "ETH Zurich", "University of Cape Town",
     "University of Melbourne", "Sorbonne University", "University of Toronto",
     "National University of Singapore", "University of Oxford"),
    (
        T("search_university", "Profile", "Find the university", "name=@",
          "country:pick:countries web_domain:pick:edu_domains founded:int:1100:2010 student_count:int:2000:70000"),
        T("university_rankings", "Rankings", "Get ranking data", "name=@",
          "world_rank:int:1:500 score:float:40:100:1"),
        T("university_programs", "Programs", "Get program catalogue summary", "name=@",
          "program_count:int:20:400 top_program:pick:programs"),
        T("country_universities", "National Peers", "List universities in the same country",
          "country=search_university.country", "university_count:int:10:900 top_peer:pick:universities"),
        T("university_research", "Research", "Get research output", "name=@",
          "research_output:int:100:20000 citations_per_paper:float:1:30:1"),
    ),
    (M("prestige_score", "university_rankings.score:0.6:100 search_university.student_count:0.4:60000",
       "prestige score (0-100) based on ranking score (60%) and enrolment (40%, cap 60000)"),),
    (B("tier", "prestige_score", "80=elite,60=strong", "regional", "tier: elite (>=80), strong (60-80), regional (<60)"),),
))

_register(Family(
    "usgs-earthquake-monitor", "USGS Earthquake Monitor", "region", "seismic regions",
    "Monitor seismic activity in {n} regions ({names}) using {m} API endpoints per region.",
    "earthquake_report.json",
    ("California", "Alaska", "Japan", "Chile", "Indonesia", "Turkey", "Italy", "New Zealand",
     "Iceland", "Mexico"),
    (
        T("region_summary", "Summary", "Get 30-day event summary", "region=@",
          "event_count:int:3:400 max_magnitude:float:2.5:8.5:1 avg_depth_km:float:2:300:1"),
        T("significant_events", "Significant Events", "List significant events", "region=@",
          "significant_count:int:1:20 largest_place:pick:places"),
        T("magnitude_distribution", "Magnitudes", "Get magnitude distribution", "region=@",
          "m4_count:int:1:200 m5_count:int:1:60 m6_count:int:1:10"),
        T("depth_profile", "Depth Profile", "Get depth distribution", "region=@",
          "shallow_share:float:0.1:0.9:2 deep_count:int:1:50"),
        T("tsunami_alerts", "Tsunami Alerts", "Get tsunami alert history", "region=@",
          "alert_count:int:1:5 last_alert:date"),
        T("fault_info", "Faults", "Get primary fault information", "region=@",
          "primary_fault:pick:faults slip_rate_mm:float:1:40:1"),
    ),
    (M("risk_score", "region_summary.max_magnitude:0.6:9 region_summary.event_count:0.4:400",
       "risk score (0-100) based on max magnitude (60%, cap 9) and event count (40%, cap 400)"),),
    (B("risk_level", "risk_score", "70=high,40=elevated", "low", "risk level: high (>=70), elevated (40-70), low (<40)"),),
))

_register(Family(
    "vocabulary-builder", "Vocabulary Builder", "word", "words",
    "Build vocabulary cards for {n} words ({names}) using {m} API endpoints per word.",
    "vocabulary_list.json",
    ("serendipity", "ephemeral", "ubiquitous", "eloquent", "resilient", "meticulous", "ambiguous",
     "benevolent", "candid", "tenacious"),
    (
        T("define_word", "Definition", "Get definition and part of speech", "word=@",
          "part_of_speech:pick:pos definition:phrase:lorem:6 syllables:int:1:6"),
        T("synonyms", "Synonyms", "List synonyms", "word=@",
          "synonym_count:int:1:15 top_synonyms:sample:vocab:3"),
        T("antonyms", "Antonyms", "List antonyms", "word=@",
          "antonym_count:int:1:8 top_antonym:pick:vocab"),
        T("example_sentences", "Examples", "Get usage examples", "word=@",
          "example_count:int:1:10 example:phrase:lorem:7"),
        T("word_frequency", "Frequency", "Get corpus frequency", "word=@",
          "frequency_per_million:float:0.1:60:2 zipf:float:1:7:2"),
    ),
    (M("difficulty_index", "define_word.syllables:0.5:6 synonyms.synonym_count:0.5:15",
       "difficulty index (0-100) based on syllables (50%, cap 6) and synonym count (50%, cap 15)"),),
    (B("level", "difficulty_index", "60=advanced,35=intermediate", "basic",
       "level: advanced (>=60), intermediate (35-60), basic (<35)"),),
))

_register(Family(
    "world-bank-snapshot", "World Bank Snapshot", "economy", "economies",
    "Produce development snapshots for {n} economies ({names}) using {m} indicator endpoints per economy.",
    "world_bank_snapshot.json",
    ("USA", "CHN", "IND", "BRA", "NGA", "DEU", "JPN", "IDN", "ZAF", "MEX"),
    (
        T("country_profile", "Profile", "Get income level, region and population", "code=@",
          "income_level:pick:income_levels region:pick:wb_regions capital:pick:cities "
          "population_millions:float:1:1420:1"),
        T("gdp_indicator", "GDP", "Get GDP indicators", "code=@",
          "gdp_usd_billions:float:10:26000:1 gdp_growth_pct:float:0.1:9:2"),
        T("population_indicator", "Population", "Get population indicators", "code=@",
          "urban_share:float:0.2:0.95:2 growth_pct:float:0.1:3.5:2"),
        T("education_indicator", "Education", "Get education indicators", "code=@",
          "literacy_rate:float:0.5:0.99:2 school_years:float:4:14:1"),
        T("health_indicator", "Health", "Get health indicators", "code=@",
          "life_expectancy:float:50:85:1 health_spend_pct:float:2:18:1"),
    ),
    (M("economy_score", "gdp_indicator.gdp_usd_billions:0.6:5000 gdp_indicator.gdp_growth_pct:0.4:8",
       "economy score (0-100) based on GDP (60%, cap 5000bn) and growth (40%, cap 8%)"),),
    (B("economy_class", "economy_score", "60=large,30=mid", "small", "economy class: large (>=60), mid (30-60), small (<30)"),),
))

FAMILY_SLUGS = tuple(FAMILIES)

# Value pools for generated fields. Nothing here may equal "Unknown"/"None" or 0,
# so clean records never trip the quality check.
POOLS: dict[str, tuple[str, ...]] = {
    "countries": ("Iran", "Thailand", "United States", "United Kingdom", "Ethiopia", "Burma",
                  "Russia", "Norway", "Egypt", "Japan", "France", "Turkey", "Canada", "Australia"),
    "country_names": ("Peru", "Chile", "Ghana", "Vietnam", "Poland", "Greece", "Morocco", "Nepal",
                      "Portugal", "Finland", "Colombia", "Malaysia"),
    "country_codes": ("US", "GB", "FR", "DE", "BR", "IN", "JP", "NG", "MX", "SE", "IT", "KR"),
    "regions": ("Western Europe", "Southeast Asia", "East Africa", "North America", "South America",
                "Middle East", "Oceania", "Central Asia", "Scandinavia", "Caribbean"),
    "cities": ("Lisbon", "Osaka", "Denver", "Accra", "Hanoi", "Krakow", "Porto Alegre", "Perth",
               "Gothenburg", "Monterrey", "Izmir", "Quebec City"),
    "temperaments": ("Gentle", "Playful", "Affectionate", "Independent", "Curious", "Calm",
                     "Vocal", "Energetic", "Reserved", "Social"),
    "coat_types": ("long", "short", "semi-long", "hairless", "curly", "double"),
    "lengths": ("short", "medium", "long", "very long"),
    "rarity": ("common", "uncommon", "rare", "very rare", "legendary"),
    "cat_breeds": ("Persian", "Siamese", "Maine Coon", "Bengal", "Ragdoll", "Sphynx", "Abyssinian",
                   "Burmese", "Chartreux", "Savannah", "Tonkinese", "Manx", "Havana Brown"),
    "facts": ("cats", "sleep", "hours", "whiskers", "sense", "nocturnal", "hunters", "purring",
              "grooming", "ancient", "sacred", "temples", "breeders", "fur", "calm", "loyal"),
    "cocktail_categories": ("Ordinary Drink", "Cocktail", "Shot", "Punch / Party Drink", "Shake",
                            "Coffee / Tea", "Homemade Liqueur"),
    "glasses": ("Cocktail glass", "Highball glass", "Old-fashioned glass", "Collins glass",
                "Margarita glass", "Coupe", "Hurricane glass", "Copper mug"),
    "spirits": ("Tequila", "Light rum", "Bourbon", "Gin", "Vodka", "Campari", "Rye whiskey",
                "Cognac", "Dark rum", "Mezcal"),
    "mixers": ("Lime juice", "Triple sec", "Sugar syrup", "Mint", "Soda water", "Angostura bitters",
               "Sweet vermouth", "Dry vermouth", "Orange peel", "Cranberry juice", "Orgeat",
               "Egg white", "Lemon juice"),
    "cocktail_names": ("Paloma", "Gimlet", "Sidecar", "Boulevardier", "Caipirinha", "Aviation",
                       "Sazerac", "Bramble", "Tom Collins", "French 75", "Pisco Sour", "Hemingway Special"),
    "steps": ("shake", "stir", "strain", "chilled", "glass", "garnish", "ice", "muddle", "build",
              "top", "with", "lime", "twist", "serve"),
    "software": ("fast", "reliable", "service", "for", "git", "repositories", "pages", "runner",
                 "daemon", "shell", "access", "command", "line", "tool", "static", "sites"),
    "branch_names": ("main", "master", "develop", "trunk", "stable"),
    "developers": ("alice.ng", "bkowalski", "cmartin", "dpatel", "e.rossi", "fsato", "gmueller",
                   "h.okafor", "ivanov", "jlee", "kwright", "lfernandez"),
    "issue_titles": ("Flaky test in CI", "Memory leak on shutdown", "Update dependencies",
                     "Docs: clarify setup", "Timeout on large repos", "Add metrics endpoint",
                     "Crash when config missing", "Improve error message"),
    "languages": ("English", "Portuguese", "Swahili", "German", "French", "Hindi", "Japanese",
                  "Spanish", "Arabic", "Norwegian", "Tamil", "Bengali"),
    "currency_codes": ("JPY", "BRL", "KES", "EUR", "CAD", "INR", "AUD", "MXN", "NOK", "EGP"),
    "currencies": ("Yen", "Real", "Shilling", "Euro", "Dollar", "Rupee", "Peso", "Krone", "Pound"),
    "symbols": ("$", "R$", "KSh", "EUR", "kr", "Rs", "E£", "Y"),
    "utc_offsets": ("UTC-08:00", "UTC-05:00", "UTC-03:00", "UTC+01:00", "UTC+02:00", "UTC+03:00",
                    "UTC+05:30", "UTC+09:00", "UTC+10:00"),
    "abilities": ("Strength", "Dexterity", "Constitution", "Intelligence", "Wisdom", "Charisma"),
    "spells": ("Fireball", "Cure Wounds", "Shield", "Misty Step", "Counterspell", "Bless",
               "Hunter's Mark", "Eldritch Blast", "Healing Word", "Thunderwave"),
    "equipment": ("Longsword", "Shortbow", "Chain mail", "Spellbook", "Holy symbol", "Lute",
                  "Thieves' tools", "Explorer's pack", "Quarterstaff", "Shield"),
    "skills": ("Athletics", "Acrobatics", "Stealth", "Arcana", "History", "Insight", "Perception",
               "Persuasion", "Survival", "Medicine"),
    "subclasses": ("School of Evocation", "Champion", "Thief", "Life Domain", "Oath of Devotion",
                   "Hunter", "College of Lore", "Circle of the Moon", "Way of the Open Hand", "The Fiend"),
    "fantasy": ("ancient", "arcane", "order", "sworn", "to", "protect", "the", "realm", "secret",
                "oath", "shadow", "flame", "wild", "storm"),
    "monster_types": ("humanoid", "dragon", "aberration", "undead", "monstrosity", "giant",
                      "elemental", "fiend", "ooze", "beast"),
    "actions": ("Multiattack", "Bite", "Claw", "Fire Breath", "Eye Rays", "Tentacles",
                "Petrifying Gaze", "Engulf", "Scimitar", "Paralyzing Touch"),
    "traits": ("Darkvision", "Regeneration", "Legendary Resistance", "Amphibious", "Keen Smell",
               "Magic Resistance", "Pack Tactics", "Transparent"),
    "damage_types": ("fire", "cold", "poison", "necrotic", "psychic", "acid", "lightning",
                     "thunder", "radiant", "slashing"),
    "habitats": ("forest", "mountain", "underdark", "swamp", "coast", "desert", "arctic",
                 "grassland", "urban", "ocean"),
    "dog_groups": ("Sporting", "Hound", "Working", "Herding", "Toy", "Terrier", "Non-Sporting"),
    "image_files": ("n02085620_1152.jpg", "n02099712_3503.jpg", "n02110185_1469.jpg",
                    "n02113624_9129.jpg", "n02108089_1003.jpg", "n02110341_2864.jpg"),
    "dog_variants": ("standard", "miniature", "toy", "wirehaired", "longhaired", "smooth",
                     "english", "american", "scottish"),
    "dog_breeds": ("Labrador", "Beagle", "Husky", "Poodle", "Boxer", "Dalmatian", "Corgi", "Shiba",
                   "Akita", "Collie", "Vizsla", "Whippet", "Samoyed"),
    "levels": ("low", "moderate", "high", "seasonal"),
    "studios": ("Sunrise", "Bones", "White Fox", "MAPPA", "Wit Studio", "Studio Ghibli",
                "Madhouse", "Production I.G", "Kyoto Animation"),
    "genres": ("Action", "Drama", "Sci-Fi", "Comedy", "Fantasy", "Mystery", "Sports", "Romance",
               "Psychological", "Adventure"),
    "age_ratings": ("G", "PG", "PG-13", "R - 17+", "R+"),
    "character_names": ("Spike Spiegel", "Edward Elric", "Okabe Rintaro", "Shigeo Kageyama",
                        "Eren Yeager", "Chihiro Ogino", "Light Yagami", "Shoyo Hinata",
                        "Frieren", "Thorfinn"),
    "people": ("Ana Souza", "Ben Carter", "Chen Wei", "Dana Fischer", "Emeka Obi", "Farah Khan",
               "Goro Tanaka", "Hana Novak", "Ian Walsh", "Julia Costa", "Kofi Mensah", "Lena Berg"),
    "companies": ("Romaguera-Crona", "Deckow-Crist", "Keebler LLC", "Robel-Corkery",
                  "Hoeger LLC", "Abernathy Group", "Yost and Sons", "Considine-Lockman"),
    "lorem": ("lorem", "ipsum", "dolor", "sit", "amet", "consectetur", "adipiscing", "elit",
              "sed", "tempor", "magna", "aliqua", "veniam", "nostrud"),
    "streets": ("Kulas Light", "Victor Plains", "Douglas Extension", "Hoeger Mall",
                "Skiles Walks", "Norberto Crossing", "Rex Trail", "Ellsworth Summit"),
    "email_first": ("sincere", "shanna", "nathan", "julianne", "lucio", "karley", "telly",
                    "sherwood", "chaim", "rey"),
    "domains": ("april.biz", "melissa.tv", "yesenia.net", "kory.org", "annie.ca", "jasper.info",
                "billy.biz", "rosamond.me"),
    "chromosomes": ("chr1", "chr2", "chr7", "chr11", "chr12", "chr13", "chr17", "chr19", "chrX"),
    "motifs": ("TATA box", "CAAT box", "GC box", "E-box", "CpG island", "Kozak sequence"),
    "residues": ("MDLSA", "MEEPQ", "MRPSG", "MTEYK", "MPLNV", "MKTAY", "MQRSP"),
    "genders": ("male", "female"),
    "meanings": ("light", "peace", "strong", "gift", "grace", "brave", "river", "star", "wise"),
    "poke_types": ("electric", "grass", "fire", "water", "normal", "ghost", "fighting", "dragon",
                   "psychic", "steel", "ice", "rock"),
    "poke_habitats": ("forest", "grassland", "mountain", "cave", "sea", "urban", "rare", "waters-edge"),
    "pokemon_names": ("raichu", "ivysaur", "charmeleon", "wartortle", "vaporeon", "haunter",
                      "munchlax", "riolu", "magikarp", "mew"),
    "moves": ("Thunderbolt", "Solar Beam", "Flamethrower", "Hydro Pump", "Shadow Ball",
              "Body Slam", "Aura Sphere", "Hyper Beam", "Psychic", "Quick Attack"),
    "phone_formats": ("(###) ###-####", "0###-###-####", "##-##-##-##-##", "+## ### #######"),
    "meal_categories": ("Vegetarian", "Chicken", "Beef", "Seafood", "Dessert", "Lamb", "Pasta", "Side"),
    "cuisines": ("Italian", "Japanese", "British", "Thai", "Tunisian", "Greek", "French",
                 "Spanish", "Indian", "Moroccan"),
    "foods": ("Penne", "Chicken thighs", "Beef fillet", "Rice noodles", "Eggs", "Aubergine",
              "Courgette", "Saffron", "Mascarpone", "Basmati rice"),
    "meal_names": ("Carbonara", "Katsu Curry", "Shepherd's Pie", "Green Curry", "Brik",
                   "Spanakopita", "Coq au Vin", "Gazpacho", "Dal Makhani", "Tagine", "Risotto"),
    "ingredient_types": ("Pasta", "Meat", "Vegetable", "Grain", "Dairy", "Spice", "Egg"),
    "char_status": ("Alive", "Dead"),
    "species": ("Human", "Alien", "Humanoid", "Robot", "Cronenberg", "Animal", "Mythological Creature"),
    "rm_locations": ("Earth (C-137)", "Citadel of Ricks", "Bird World", "Planet Squanch",
                     "Earth (Replacement Dimension)", "Gazorpazorp", "Purge Planet"),
    "location_types": ("Planet", "Space station", "Dimension", "Microverse", "Resort", "Dream"),
    "dimensions": ("Dimension C-137", "Replacement Dimension", "Cronenberg Dimension",
                   "Fantasy Dimension", "Post-Apocalyptic Dimension"),
    "episode_codes": ("S01E01", "S01E06", "S02E03", "S02E10", "S03E01", "S03E07", "S04E05",
                      "S05E02", "S06E01"),
    "rm_chars": ("Rick Sanchez", "Morty Smith", "Summer Smith", "Birdperson", "Squanchy",
                 "Mr. Poopybutthole", "Tammy", "Krombopulos Michael", "Noob-Noob"),
    "networks": ("AMC", "HBO", "FX", "Apple TV+", "Netflix", "BBC One", "Showtime", "Syfy"),
    "edu_domains": ("mit.edu", "stanford.edu", "u-tokyo.ac.jp", "ethz.ch", "uct.ac.za",
                    "unimelb.edu.au", "sorbonne-universite.fr", "utoronto.ca", "nus.edu.sg", "ox.ac.uk"),
    "programs": ("Computer Science", "Medicine", "Economics", "Mechanical Engineering", "Law",
                 "Physics", "Architecture", "Biology"),
    "universities": ("Harvard University", "Kyoto University", "EPFL", "University of Witwatersrand",
                     "Monash University", "Sciences Po", "McGill University", "NTU Singapore",
                     "University of Cambridge", "Caltech"),
    "places": ("38 km SW of Ridgecrest", "72 km S of Kodiak", "off the east coast of Honshu",
               "45 km NW of Valparaiso", "Banda Sea", "12 km E of Elbistan", "Campi Flegrei",
               "30 km N of Kaikoura", "Reykjanes Peninsula", "Guerrero coast"),
    "faults": ("San Andreas", "Aleutian Megathrust", "Japan Trench", "Nazca Subduction",
               "Sunda Megathrust", "North Anatolian", "Apennine Front", "Alpine Fault",
               "Mid-Atlantic Ridge", "Middle America Trench"),
    "pos": ("noun", "verb", "adjective", "adverb"),
    "vocab": ("fortuity", "transient", "pervasive", "articulate", "hardy", "scrupulous", "equivocal",
              "kindly", "frank", "persistent", "fleeting", "omnipresent", "fluent", "sturdy"),
    "income_levels": ("High income", "Upper middle income", "Lower middle income", "Low income"),
    "wb_regions": ("North America", "East Asia & Pacific", "South Asia", "Latin America & Caribbean",
                   "Sub-Saharan Africa", "Europe & Central Asia", "Middle East & North Africa"),
}
