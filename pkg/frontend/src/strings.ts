// All German UI strings in one place.
export const STRINGS = {
  appTitle: "Rhetorische Figuren",
  navCreate: "Beispiel einreichen",
  navFyf: "Figur finden",
  navLlm: "Chat",
  navFigures: "Figuren-Übersicht",
  navAbout: "Über das Projekt",

  createHeading: "Beispiel einreichen",
  createIntro:
    "Reichen Sie einen Satz mit einer rhetorischen Figur ein. Andere können ihn später annotieren.",
  labelText: "Text",
  labelContext: "Kontext (optional)",
  labelAuthor: "Autor",
  labelSource: "Quelle",
  provenanceHint:
    "Bitte geben Sie mindestens Autor oder Quelle an, damit keine Urheberrechte verletzt werden.",
  submit: "Absenden",
  provenanceMissing: "Bitte geben Sie mindestens Autor oder Quelle an.",
  createSuccess: "Vielen Dank! Das Beispiel wurde gespeichert.",
  confirmHeading: "Bitte bestätigen",
  confirmQuestion:
    "Der Text könnte ungültig sein. Möchten Sie ihn trotzdem einreichen?",
  confirmYes: "Trotzdem einreichen",
  confirmNo: "Abbrechen",

  fyfHeading: "Figur finden",
  fyfIntro:
    "Beschreiben Sie die Eigenschaften des Textes. Keine Sorge, Sie können jederzeit „Keines davon/Weiß nicht“ wählen.",
  ownText: "Eigenen Text eingeben",
  randomText: "Zufälliges Beispiel laden",
  noIdea: "Keines davon/Weiß nicht",
  dimensionLabels: {
    operation: "Operation",
    affected_element: "Betroffenes Element",
    operational_form: "Operationsform",
    position: "Position",
    area: "Bereich",
  } as Record<string, string>,
  searchButton: "Figuren suchen",
  noResults: "Keine passende Figur gefunden.",
  annotateSelected: "Ausgewählte Figuren annotieren",
  annotateSuccess: "Annotation gespeichert. Vielen Dank!",
  definitionsHeading: "Definitionen",
  examplesHeading: "Beispiele",
  needExample: "Bitte zuerst einen Text eingeben oder ein Beispiel laden.",
  noEligibleExample: "Kein Beispiel verfügbar.",

  llmHeading: "Chat",
  llmIntro: "Stellen Sie eine Frage zu rhetorischen Figuren.",
  llmPlaceholder: "z.B. Was ist eine Alliteration?",
  send: "Senden",
  contextsToggle: "Abgerufene Textstellen anzeigen",
  loadExample: "Beispiel aus der Datenbank laden",
  transportError: "Das Sprachmodell ist derzeit nicht erreichbar.",

  figuresHeading: "Figuren-Übersicht",
  figuresIntro: "Wählen Sie eine rhetorische Figur aus der Liste.",
  parentsHeading: "Oberbegriffe",

  aboutHeading: "Über das Projekt",
  aboutBody:
    "Diese Anwendung sammelt annotierte Beispiele deutscher rhetorischer Figuren. " +
    "Sie hilft beim Bestimmen von Figuren über Eigenschaften, erklärt Figuren mit " +
    "Definitionen und Beispielen aus einer Ontologie und beantwortet Fragen im Chat.",
  imprint: "Impressum: Forschungsprojekt rhetorische Figuren, kontakt@example.org",

  genericError: "Es ist ein Fehler aufgetreten.",
};
