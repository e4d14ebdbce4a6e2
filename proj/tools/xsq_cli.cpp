// Placeholder main; the real CLI is assembled once the library layers exist.
int main() { return 0; }
