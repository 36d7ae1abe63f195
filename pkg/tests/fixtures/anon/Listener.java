public class Listener {
    void register(Button b) {
        b.onClick(new Handler() {
            @Override
            public void handle(Event e) {
                count++;
            }
        });
    }

    int count() {
        return count;
    }
}
