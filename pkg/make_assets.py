"""One-off authoring script for the bundled few-shot assets (not shipped).

Builds the household example files for the five task types that the extracted
heat file does not cover, plus the textcraft examples, in exactly the same
block layout.  Run once, inspect word counts, commit the .txt outputs.
"""

ASSETS = "src/stateloop/assets"

PREAMBLE_HH = "Interact with a household to solve a task."
PREAMBLE_TC = "Interact with a crafting game to solve a task."


def block(goal, loc, inv, thought, action, state_keys=("current location", "current inventory")):
    lines = [f">goal: {goal}"]
    vals = [loc, inv]
    for k, v in zip(state_keys, vals):
        if v is not None:
            lines.append(f"{k}: {v}")
    lines.append(f"thought: {thought if thought else 'None'}")
    lines.append(f"action: {action}")
    return "\n".join(lines)


def tc_block(goal, inv, thought, action):
    return "\n".join(
        [f">goal: {goal}", f"current inventory: {inv}", f"thought: {thought if thought else 'None'}", f"action: {action}"]
    )


def trace(o0, steps):
    parts = [o0]
    for ctx, obs in steps:
        parts.append(ctx)
        if obs is not None:
            parts.append(obs)
    return "\n\n".join(parts)


def scaffold(preamble, examples):
    return (
        preamble
        + "\n\n\n"
        + "Here are 2 examples:"
        + "\n\n"
        + "\n\n\n\n".join(examples)
        + "\n\n\n"
        + "Here is the task.\n"
    )


def room(recs, task):
    items = ", ".join(f"a {r}" for r in recs[:-1]) + f", and a {recs[-1]}"
    return (
        f"You are in the middle of a room. Looking quickly around you, you see {items}.\n"
        f"Your task is to: {task}."
    )


def seen(objs):
    if not objs:
        return "nothing"
    if len(objs) == 1:
        return f"a {objs[0]}"
    return ", ".join(f"a {o}" for o in objs[:-1]) + f", and a {objs[-1]}"


ROOM_A = [
    "cabinet 6", "cabinet 5", "cabinet 4", "cabinet 3", "cabinet 2", "cabinet 1",
    "coffeemachine 1", "countertop 2", "countertop 1", "diningtable 1",
    "drawer 3", "drawer 2", "drawer 1", "fridge 1", "garbagecan 1",
    "microwave 1", "shelf 2", "shelf 1", "sidetable 1", "sinkbasin 1",
    "stoveburner 2", "stoveburner 1", "toaster 1",
]

ROOM_B = [
    "cabinet 9", "cabinet 8", "cabinet 7", "cabinet 6", "cabinet 5",
    "cabinet 4", "cabinet 3", "cabinet 2", "cabinet 1", "coffeemachine 1",
    "countertop 3", "countertop 2", "countertop 1", "diningtable 1",
    "drawer 2", "drawer 1", "fridge 1", "garbagecan 1", "microwave 1",
    "shelf 3", "shelf 2", "shelf 1", "sinkbasin 1", "stoveburner 4",
    "stoveburner 3", "stoveburner 2", "stoveburner 1", "toaster 1",
]

ROOM_C = [
    "cabinet 4", "cabinet 3", "cabinet 2", "cabinet 1", "coffeemachine 1",
    "countertop 2", "countertop 1", "desklamp 1", "diningtable 1",
    "drawer 4", "drawer 3", "drawer 2", "drawer 1", "fridge 1",
    "garbagecan 1", "microwave 1", "shelf 2", "shelf 1", "sidetable 2",
    "sidetable 1", "sinkbasin 1", "stoveburner 2", "stoveburner 1",
    "toaster 1",
]

# ---------------------------------------------------------------- clean
g = "put a clean lettuce in diningtable"
clean_1 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a lettuce, then clean it with sinkbasin, then put it in diningtable. "
                "First I need to find a lettuce. A lettuce is more likely to appear in fridge (1), diningtable (1), sinkbasin (1), "
                "countertop (1-2), cabinet (1-6). I can check one by one, starting with fridge 1.",
                "go to fridge 1",
            ),
            "The fridge 1 is closed.",
        ),
        (block(g, "fridge 1", "None", None, "open fridge 1"),
         "You open the fridge 1. The fridge 1 is open. In it, you see a cup 2, a egg 1, a potato 3, and a potato 2."),
        (block(g, "fridge 1", "None", None, "go to diningtable 1"),
         "On the diningtable 1, you see a apple 2, a bread 1, a butterknife 2, a cup 1, a fork 2, a knife 1, a knife 2, a lettuce 1, a mug 2, a peppershaker 1, a plate 2, a saltshaker 1, a soapbottle 1, a spatula 1, and a spoon 2."),
        (block(g, "diningtable 1", "None", "Now I find a lettuce (1). Next, I need to take it.", "take lettuce 1 from diningtable 1"),
         "You pick up the lettuce 1 from the diningtable 1."),
        (block(g, "diningtable 1", "lettuce 1",
               "Now I take a lettuce (1). Next, I need to go to sinkbasin (1) and clean it.", "go to sinkbasin 1"),
         "On the sinkbasin 1, you see a dishsponge 1, a mug 1, and a spatula 2."),
        (block(g, "sinkbasin 1", "lettuce 1", None, "clean lettuce 1 with sinkbasin 1"),
         "You clean the lettuce 1 using the sinkbasin 1."),
        (block(g, "sinkbasin 1", "lettuce 1",
               "Now I clean a lettuce (1). Next, I need to put it in/on diningtable 1.", "go to diningtable 1"),
         "On the diningtable 1, you see a apple 2, a bread 1, a butterknife 2, a cup 1, a fork 2, a knife 1, a knife 2, a mug 2, a peppershaker 1, a plate 2, a saltshaker 1, a soapbottle 1, a spatula 1, and a spoon 2."),
        (block(g, "diningtable 1", "lettuce 1", None, "put lettuce 1 in/on diningtable 1"), None),
    ],
)

g = "clean some apple and put it in sidetable"
clean_2 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take an apple, then clean it with sinkbasin, then put it in sidetable. "
                "First I need to find an apple. An apple is more likely to appear in fridge (1), diningtable (1), countertop (1-2), "
                "sidetable (1), garbagecan (1). I can check one by one, starting with fridge 1.",
                "go to fridge 1",
            ),
            "The fridge 1 is closed.",
        ),
        (block(g, "fridge 1", "None", None, "open fridge 1"),
         "You open the fridge 1. The fridge 1 is open. In it, you see a lettuce 2, a mug 1, and a tomato 1."),
        (block(g, "fridge 1", "None", None, "go to diningtable 1"),
         "On the diningtable 1, you see a bowl 1, a bread 2, a fork 1, a pan 1, a peppershaker 2, a plate 1, a spatula 3, and a spoon 1."),
        (block(g, "diningtable 1", "None", None, "go to countertop 1"),
         "On the countertop 1, you see a butterknife 1, a dishsponge 2, and a saltshaker 3."),
        (block(g, "countertop 1", "None", None, "go to countertop 2"),
         "On the countertop 2, you see a apple 3, a kettle 1, a knife 3, and a winebottle 1."),
        (block(g, "countertop 2", "None", "Now I find an apple (3). Next, I need to take it.", "take apple 3 from countertop 2"),
         "You pick up the apple 3 from the countertop 2."),
        (block(g, "countertop 2", "apple 3",
               "Now I take an apple (3). Next, I need to go to sinkbasin (1) and clean it.", "go to sinkbasin 1"),
         "On the sinkbasin 1, you see a cup 3, and a spoon 3."),
        (block(g, "sinkbasin 1", "apple 3", None, "clean apple 3 with sinkbasin 1"),
         "You clean the apple 3 using the sinkbasin 1."),
        (block(g, "sinkbasin 1", "apple 3",
               "Now I clean an apple (3). Next, I need to put it in/on sidetable 1.", "go to sidetable 1"),
         "On the sidetable 1, you see a mug 3, and a saltshaker 2."),
        (block(g, "sidetable 1", "apple 3", None, "put apple 3 in/on sidetable 1"), None),
    ],
)

# ---------------------------------------------------------------- cool
g = "put a cool mug in shelf"
cool_1 = trace(
    room(ROOM_B, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a mug, then cool it with fridge, then put it in shelf. "
                "First I need to find a mug. A mug is more likely to appear in coffeemachine (1), countertop (1-3), diningtable (1), "
                "shelf (1-3), sinkbasin (1), cabinet (1-9). I can check one by one, starting with coffeemachine 1.",
                "go to coffeemachine 1",
            ),
            "On the coffeemachine 1, you see nothing.",
        ),
        (block(g, "coffeemachine 1", "None", None, "go to countertop 1"),
         "On the countertop 1, you see a bread 1, a fork 1, a kettle 1, and a saltshaker 1."),
        (block(g, "countertop 1", "None", None, "go to countertop 2"),
         "On the countertop 2, you see a butterknife 1, a dishsponge 1, and a plate 2."),
        (block(g, "countertop 2", "None", None, "go to countertop 3"),
         "On the countertop 3, you see a bowl 1, a knife 1, a mug 2, a pan 1, and a spatula 1."),
        (block(g, "countertop 3", "None", "Now I find a mug (2). Next, I need to take it.", "take mug 2 from countertop 3"),
         "You pick up the mug 2 from the countertop 3."),
        (block(g, "countertop 3", "mug 2",
               "Now I take a mug (2). Next, I need to go to a fridge (1) and cool it.", "go to fridge 1"),
         "The fridge 1 is closed."),
        (block(g, "fridge 1", "mug 2", None, "cool mug 2 with fridge 1"),
         "You cool the mug 2 using the fridge 1."),
        (block(g, "fridge 1", "mug 2",
               "Now I cool a mug (2). Next, I need to put it in/on shelf 1.", "go to shelf 1"),
         "On the shelf 1, you see a peppershaker 2, and a winebottle 1."),
        (block(g, "shelf 1", "mug 2", None, "put mug 2 in/on shelf 1"), None),
    ],
)

g = "cool some pan and put it in stoveburner"
cool_2 = trace(
    room(ROOM_B, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a pan, then cool it with fridge, then put it in stoveburner. "
                "First I need to find a pan. A pan is more likely to appear in stoveburner (1-4), sinkbasin (1), diningtable (1), "
                "countertop (1-3), cabinet (1-9). I can check one by one, starting with sinkbasin 1.",
                "go to sinkbasin 1",
            ),
            "On the sinkbasin 1, you see a butterknife 2, a cup 1, a dishsponge 1, and a spoon 3.",
        ),
        (block(g, "sinkbasin 1", "None", None, "go to stoveburner 1"),
         "On the stoveburner 1, you see nothing."),
        (block(g, "stoveburner 1", "None", None, "go to stoveburner 2"),
         "On the stoveburner 2, you see a kettle 2, and a pot 1."),
        (block(g, "stoveburner 2", "None", None, "go to stoveburner 3"),
         "On the stoveburner 3, you see a pan 1."),
        (block(g, "stoveburner 3", "None", "Now I find a pan (1). Next, I need to take it.", "take pan 1 from stoveburner 3"),
         "You pick up the pan 1 from the stoveburner 3."),
        (block(g, "stoveburner 3", "pan 1",
               "Now I take a pan (1). Next, I need to go to a fridge (1) and cool it.", "go to fridge 1"),
         "The fridge 1 is closed."),
        (block(g, "fridge 1", "pan 1", None, "cool pan 1 with fridge 1"),
         "You cool the pan 1 using the fridge 1."),
        (block(g, "fridge 1", "pan 1",
               "Now I cool a pan (1). Next, I need to put it in/on a stoveburner. The stoveburner 1 was empty, so I can put it there.",
               "go to stoveburner 1"),
         "On the stoveburner 1, you see nothing."),
        (block(g, "stoveburner 1", "pan 1", None, "put pan 1 in/on stoveburner 1"), None),
    ],
)

# ---------------------------------------------------------------- examine
g = "examine the book with the desklamp"
examine_1 = trace(
    room(ROOM_C, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a book, then find and use a desklamp. "
                "First I need to find a book. A book is more likely to appear in sidetable (1-2), shelf (1-2), drawer (1-4), "
                "diningtable (1). I can check one by one, starting with shelf 1.",
                "go to shelf 1",
            ),
            "On the shelf 1, you see a creditcard 2, a pencil 2, and a vase 1.",
        ),
        (block(g, "shelf 1", "None", None, "go to shelf 2"),
         "On the shelf 2, you see a keychain 2, a statue 1, and a tissuebox 2."),
        (block(g, "shelf 2", "None", None, "go to diningtable 1"),
         "On the diningtable 1, you see a bowl 1, a cd 1, a creditcard 3, a keychain 3, a mug 1, a pen 3, a pencil 3, a statue 2, a tissuebox 1, and a watch 1."),
        (block(g, "diningtable 1", "None", None, "go to sidetable 1"),
         "On the sidetable 1, you see a creditcard 1, and a pencil 1."),
        (block(g, "sidetable 1", "None", None, "go to sidetable 2"),
         "On the sidetable 2, you see a alarmclock 1, a book 2, and a pen 1."),
        (block(g, "sidetable 2", "None", "Now I find a book (2). Next, I need to take it.", "take book 2 from sidetable 2"),
         "You pick up the book 2 from the sidetable 2."),
        (block(g, "sidetable 2", "book 2",
               "Now I take a book (2). Next, I need to find a desklamp and use it. I saw a desklamp (1) in the room, so I can "
               "go to it directly.", "go to desklamp 1"),
         "On the desklamp 1, you see nothing."),
        (block(g, "desklamp 1", "book 2", "Now I find the desklamp (1). Next, I need to use it.", "use desklamp 1"), None),
    ],
)

g = "examine the cellphone with the desklamp"
examine_2 = trace(
    room(ROOM_C, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a cellphone, then find and use a desklamp. "
                "First I need to find a cellphone. A cellphone is more likely to appear in sidetable (1-2), drawer (1-4), "
                "shelf (1-2), diningtable (1). I can check one by one, starting with sidetable 1.",
                "go to sidetable 1",
            ),
            "On the sidetable 1, you see a creditcard 1, and a pencil 1.",
        ),
        (block(g, "sidetable 1", "None", None, "go to sidetable 2"),
         "On the sidetable 2, you see a alarmclock 2, a book 1, and a vase 2."),
        (block(g, "sidetable 2", "None", None, "go to shelf 1"),
         "On the shelf 1, you see a pencil 2, a statue 1, and a vase 1."),
        (block(g, "shelf 1", "None", None, "go to drawer 1"),
         "The drawer 1 is closed."),
        (block(g, "drawer 1", "None", None, "open drawer 1"),
         "You open the drawer 1. The drawer 1 is open. In it, you see a keychain 1."),
        (block(g, "drawer 1", "None", None, "go to drawer 2"),
         "The drawer 2 is closed."),
        (block(g, "drawer 2", "None", None, "open drawer 2"),
         "You open the drawer 2. The drawer 2 is open. In it, you see a cellphone 2, and a pen 2."),
        (block(g, "drawer 2", "None", "Now I find a cellphone (2). Next, I need to take it.", "take cellphone 2 from drawer 2"),
         "You pick up the cellphone 2 from the drawer 2."),
        (block(g, "drawer 2", "cellphone 2",
               "Now I take a cellphone (2). Next, I need to go to the desklamp (1) and use it.", "go to desklamp 1"),
         "On the desklamp 1, you see nothing."),
        (block(g, "desklamp 1", "cellphone 2", None, "use desklamp 1"), None),
    ],
)

# ---------------------------------------------------------------- put
g = "put a peppershaker in drawer"
put_1 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a peppershaker, then put it in drawer. "
                "First I need to find a peppershaker. A peppershaker is more likely to appear in countertop (1-2), diningtable (1), "
                "shelf (1-2), cabinet (1-6), drawer (1-3). I can check one by one, starting with countertop 1.",
                "go to countertop 1",
            ),
            "On the countertop 1, you see a bowl 2, a dishsponge 1, a mug 3, and a winebottle 2.",
        ),
        (block(g, "countertop 1", "None", None, "go to countertop 2"),
         "On the countertop 2, you see a butterknife 1, a kettle 2, a plate 3, and a spoon 3."),
        (block(g, "countertop 2", "None", None, "go to shelf 1"),
         "On the shelf 1, you see a cup 2, and a soapbottle 1."),
        (block(g, "shelf 1", "None", None, "go to shelf 2"),
         "On the shelf 2, you see nothing."),
        (block(g, "shelf 2", "None", None, "go to diningtable 1"),
         "On the diningtable 1, you see a apple 1, a bread 1, a fork 3, a fork 2, a mug 2, a peppershaker 2, a plate 2, a pot 1, a soapbottle 3, a spatula 1, and a spoon 2."),
        (block(g, "diningtable 1", "None",
               "Now I find a peppershaker (2). Next, I need to take it.", "take peppershaker 2 from diningtable 1"),
         "You pick up the peppershaker 2 from the diningtable 1."),
        (block(g, "diningtable 1", "peppershaker 2",
               "Now I take a peppershaker (2). Next, I need to put it in/on drawer 1.", "go to drawer 1"),
         "The drawer 1 is closed."),
        (block(g, "drawer 1", "peppershaker 2", None, "open drawer 1"),
         "You open the drawer 1. The drawer 1 is open. In it, you see a butterknife 2."),
        (block(g, "drawer 1", "peppershaker 2", None, "put peppershaker 2 in/on drawer 1"), None),
    ],
)

g = "put some bread in countertop"
put_2 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take a bread, then put it in countertop. "
                "First I need to find a bread. A bread is more likely to appear in diningtable (1), countertop (1-2), "
                "fridge (1), cabinet (1-6), garbagecan (1). I can check one by one, starting with diningtable 1.",
                "go to diningtable 1",
            ),
            "On the diningtable 1, you see a apple 2, a butterknife 1, a fork 1, a knife 2, a mug 1, a plate 1, a saltshaker 2, and a spoon 1.",
        ),
        (block(g, "diningtable 1", "None", None, "go to fridge 1"),
         "The fridge 1 is closed."),
        (block(g, "fridge 1", "None", None, "open fridge 1"),
         "You open the fridge 1. The fridge 1 is open. In it, you see a cup 1, a lettuce 1, and a tomato 2."),
        (block(g, "fridge 1", "None", None, "go to cabinet 1"),
         "The cabinet 1 is closed."),
        (block(g, "cabinet 1", "None", None, "open cabinet 1"),
         "You open the cabinet 1. The cabinet 1 is open. In it, you see a dishsponge 3, and a peppershaker 3."),
        (block(g, "cabinet 1", "None", None, "go to cabinet 2"),
         "The cabinet 2 is closed."),
        (block(g, "cabinet 2", "None", None, "open cabinet 2"),
         "You open the cabinet 2. The cabinet 2 is open. In it, you see a bread 3, and a soapbottle 2."),
        (block(g, "cabinet 2", "None", "Now I find a bread (3). Next, I need to take it.", "take bread 3 from cabinet 2"),
         "You pick up the bread 3 from the cabinet 2."),
        (block(g, "cabinet 2", "bread 3",
               "Now I take a bread (3). Next, I need to put it in/on countertop 1.", "go to countertop 1"),
         "On the countertop 1, you see a kettle 1, and a spatula 2."),
        (block(g, "countertop 1", "bread 3", None, "put bread 3 in/on countertop 1"), None),
    ],
)

# ---------------------------------------------------------------- puttwo
g = "put two saltshaker in drawer"
puttwo_1 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take the first saltshaker, then put it in drawer, then find and take the "
                "second saltshaker, then put it in drawer. A saltshaker is more likely to appear in countertop (1-2), "
                "diningtable (1), shelf (1-2), cabinet (1-6). I can check one by one, starting with countertop 1.",
                "go to countertop 1",
            ),
            "On the countertop 1, you see a bowl 1, a peppershaker 1, and a saltshaker 1.",
        ),
        (block(g, "countertop 1", "None",
               "Now I find the first saltshaker (1). Next, I need to take it.", "take saltshaker 1 from countertop 1"),
         "You pick up the saltshaker 1 from the countertop 1."),
        (block(g, "countertop 1", "saltshaker 1",
               "Now I take the first saltshaker (1). Next, I need to put it in/on drawer 1.", "go to drawer 1"),
         "The drawer 1 is closed."),
        (block(g, "drawer 1", "saltshaker 1", None, "open drawer 1"),
         "You open the drawer 1. The drawer 1 is open. In it, you see a fork 2."),
        (block(g, "drawer 1", "saltshaker 1", None, "put saltshaker 1 in/on drawer 1"),
         "You put the saltshaker 1 in/on the drawer 1."),
        (block(g, "drawer 1", "None",
               "Now I put the first saltshaker in drawer. Next, I need to find the second saltshaker. I can check the locations "
               "I have not checked yet, starting with countertop 2.", "go to countertop 2"),
         "On the countertop 2, you see a dishsponge 2, and a kettle 1."),
        (block(g, "countertop 2", "None", None, "go to diningtable 1"),
         "On the diningtable 1, you see a apple 1, a bread 2, a fork 1, a mug 2, a plate 1, a saltshaker 3, and a spoon 2."),
        (block(g, "diningtable 1", "None",
               "Now I find the second saltshaker (3). Next, I need to take it.", "take saltshaker 3 from diningtable 1"),
         "You pick up the saltshaker 3 from the diningtable 1."),
        (block(g, "diningtable 1", "saltshaker 3",
               "Now I take the second saltshaker (3). Next, I need to put it in/on drawer 1.", "go to drawer 1"),
         "The drawer 1 is open. In it, you see a fork 2, and a saltshaker 1."),
        (block(g, "drawer 1", "saltshaker 3", None, "put saltshaker 3 in/on drawer 1"), None),
    ],
)

g = "put two egg in fridge"
puttwo_2 = trace(
    room(ROOM_A, g),
    [
        (
            block(
                g, "starting location", "None",
                "To solve the task, I need to find and take the first egg, then put it in fridge, then find and take the second "
                "egg, then put it in fridge. An egg is more likely to appear in fridge (1), countertop (1-2), diningtable (1), "
                "sinkbasin (1), garbagecan (1). I can check one by one, starting with countertop 1.",
                "go to countertop 1",
            ),
            "On the countertop 1, you see a egg 1, a mug 1, and a spatula 1.",
        ),
        (block(g, "countertop 1", "None",
               "Now I find the first egg (1). Next, I need to take it.", "take egg 1 from countertop 1"),
         "You pick up the egg 1 from the countertop 1."),
        (block(g, "countertop 1", "egg 1",
               "Now I take the first egg (1). Next, I need to put it in/on fridge 1.", "go to fridge 1"),
         "The fridge 1 is closed."),
        (block(g, "fridge 1", "egg 1", None, "open fridge 1"),
         "You open the fridge 1. The fridge 1 is open. In it, you see a lettuce 2, and a tomato 1."),
        (block(g, "fridge 1", "egg 1", None, "put egg 1 in/on fridge 1"),
         "You put the egg 1 in/on the fridge 1."),
        (block(g, "fridge 1", "None",
               "Now I put the first egg in fridge. Next, I need to find the second egg. I can check the locations I have not "
               "checked yet, starting with countertop 2.", "go to countertop 2"),
         "On the countertop 2, you see a bowl 2, a egg 3, and a knife 1."),
        (block(g, "countertop 2", "None",
               "Now I find the second egg (3). Next, I need to take it.", "take egg 3 from countertop 2"),
         "You pick up the egg 3 from the countertop 2."),
        (block(g, "countertop 2", "egg 3",
               "Now I take the second egg (3). Next, I need to put it in/on fridge 1.", "go to fridge 1"),
         "The fridge 1 is open. In it, you see a egg 1, a lettuce 2, and a tomato 1."),
        (block(g, "fridge 1", "egg 3", None, "put egg 3 in/on fridge 1"), None),
    ],
)

# ---------------------------------------------------------------- textcraft
tc_goal_1 = "craft 4 torch"
tc_o0_1 = (
    "You are in a crafting world. Here are some crafting commands you can use:\n"
    "craft 1 plank using 1 log\n"
    "craft 1 stick using 1 plank\n"
    "craft 4 torch using 1 stick, 1 coal\n"
    "You can get these base items: coal, log.\n"
    "Goal: craft 4 torch."
)
textcraft_1 = trace(
    tc_o0_1,
    [
        (tc_block(tc_goal_1, "None",
                  "To craft 4 torch, I need 1 stick and 1 coal. To craft 1 stick, I need 1 plank. To craft 1 plank, I need 1 log. "
                  "I should get the base items first, starting with the log.",
                  "get 1 log"),
         "Got 1 log"),
        (tc_block(tc_goal_1, "1 log", None, "get 1 coal"), "Got 1 coal"),
        (tc_block(tc_goal_1, "1 coal, 1 log",
                  "Now I have the base items. Next, I need to craft a plank from the log.",
                  "craft 1 plank using 1 log"),
         "Crafted 1 plank"),
        (tc_block(tc_goal_1, "1 coal, 1 plank", None, "craft 1 stick using 1 plank"), "Crafted 1 stick"),
        (tc_block(tc_goal_1, "1 coal, 1 stick",
                  "Now I have a stick and a coal, so I can craft the torches.",
                  "craft 4 torch using 1 stick, 1 coal"),
         None),
    ],
)

tc_goal_2 = "craft 1 fishing rod"
tc_o0_2 = (
    "You are in a crafting world. Here are some crafting commands you can use:\n"
    "craft 1 plank using 1 log\n"
    "craft 1 stick using 1 plank\n"
    "craft 1 fishing rod using 3 stick, 2 string\n"
    "You can get these base items: log, string.\n"
    "Goal: craft 1 fishing rod."
)
textcraft_2 = trace(
    tc_o0_2,
    [
        (tc_block(tc_goal_2, "None",
                  "To craft 1 fishing rod, I need 3 stick and 2 string. To craft 3 stick, I need 3 plank, which needs 3 log. "
                  "I should get the base items first.",
                  "get 3 log"),
         "Got 3 log"),
        (tc_block(tc_goal_2, "3 log", None, "get 2 string"), "Got 2 string"),
        (tc_block(tc_goal_2, "3 log, 2 string",
                  "Now I have the base items. I can craft 3 plank at once from 3 log.",
                  "craft 3 plank using 3 log"),
         "Crafted 3 plank"),
        (tc_block(tc_goal_2, "3 plank, 2 string", None, "craft 3 stick using 3 plank"), "Crafted 3 stick"),
        (tc_block(tc_goal_2, "3 stick, 2 string",
                  "Now I have 3 stick and 2 string, so I can craft the fishing rod.",
                  "craft 1 fishing rod using 3 stick, 2 string"),
         None),
    ],
)

FILES = {
    "household_clean.txt": scaffold(PREAMBLE_HH, [clean_1, clean_2]),
    "household_cool.txt": scaffold(PREAMBLE_HH, [cool_1, cool_2]),
    "household_examine.txt": scaffold(PREAMBLE_HH, [examine_1, examine_2]),
    "household_put.txt": scaffold(PREAMBLE_HH, [put_1, put_2]),
    "household_puttwo.txt": scaffold(PREAMBLE_HH, [puttwo_1, puttwo_2]),
    "textcraft.txt": scaffold(PREAMBLE_TC, [textcraft_1, textcraft_2]),
}

for name, content in FILES.items():
    with open(f"{ASSETS}/{name}", "w") as f:
        f.write(content)
    body = content.split("Here are 2 examples:\n\n", 1)[1].split("\n\n\nHere is the task.", 1)[0]
    for i, ex in enumerate(body.split("\n\n\n\n")):
        full = len(ex.split())
        stripped = len(
            "\n".join(
                l for l in ex.splitlines()
                if not (l.startswith(">goal:") or l.startswith("current location:") or l.startswith("current inventory:"))
            ).split()
        )
        print(f"{name} ex{i}: full={full} react={stripped}")
