package org.melodeck.music;

import android.app.Activity;
import android.os.Bundle;
import android.widget.ImageButton;
import android.widget.SeekBar;
import android.widget.TextView;

public class MainActivity extends Activity {
    private TextView trackTitle;
    private TextView trackArtist;
    private SeekBar progress;
    private ImageButton playButton;
    private ImageButton shuffleButton;
    private ImageButton repeatButton;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_main);
        trackTitle = findViewById(R.id.track_title);
        trackArtist = findViewById(R.id.track_artist);
        progress = findViewById(R.id.progress);
        playButton = findViewById(R.id.play_button);
        shuffleButton = findViewById(R.id.shuffle_button);
        repeatButton = findViewById(R.id.repeat_button);
        playButton.setOnClickListener(v -> playButton.setSelected(!playButton.isSelected()));
        shuffleButton.setOnClickListener(v -> shuffleButton.setSelected(!shuffleButton.isSelected()));
        repeatButton.setOnClickListener(v -> repeatButton.setSelected(!repeatButton.isSelected()));
    }
}
